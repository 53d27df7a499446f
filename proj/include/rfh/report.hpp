#pragma once

#include <string>
#include <string_view>

#include "rfh/expansion.hpp"
#include "rfh/verify.hpp"

namespace rfh {

/// Shortest round-trippable decimal form of v (%.17g trimmed).
std::string format_double(double v);

const char* to_string(EigenMode mode);
EigenMode eigen_mode_from_string(std::string_view s);

/// CSV serializations. Every file starts with a `#`-prefixed echo of the
/// full effective config, so outputs are self-describing and byte-stable.
std::string to_csv(const ConvergenceReport& report);
std::string to_csv(const CauchyReport& report);
std::string to_csv(const BoundReport& report);

/// Structurally identical JSON forms.
std::string to_json(const ConvergenceReport& report);
std::string to_json(const CauchyReport& report);
std::string to_json(const BoundReport& report);

/// Expansion dump: `n,c_n,A_n,lambda_re,lambda_im`. extra_meta, if nonempty,
/// is inserted verbatim into the `#` header block.
std::string expansion_csv(const RfhExpansion& exp, std::string_view f_name,
                          std::string_view extra_meta = {});

/// Partial-sum trace `n,y,S_n` over the given orders and y values
/// (real-eigenvalue modes only).
std::string trace_csv(const RfhExpansion& exp, std::span<const int> orders,
                      std::span<const double> ys);

/// Coefficient dump: `n,c_n`.
std::string coefficients_csv(std::span<const double> coeffs,
                             std::string_view f_name,
                             WeightConvention convention,
                             std::string_view extra_meta = {});

}  // namespace rfh
