#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/validation.hpp"

namespace dunkl {

inline constexpr std::string_view kSweepHeader =
    "X,lambda,k,chamber,branch,kernel_log,estimate_log,log_ratio,quad_nodes,quad_delta";
inline constexpr std::string_view kHeatHeader = "t,X,Y,k,p_t,estimate,log_ratio";

// 17 significant digits, "%.17g".
std::string format_double(double v);
// Wraps the field in double quotes when it contains a comma or a quote.
std::string csv_field(std::string_view s);
// Splits one CSV line, honouring double-quoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

std::string sweep_row(const EvalReport& r);
std::string heat_row(const EvalReport& r);

void write_sweep_csv(std::ostream& out, const std::vector<EvalReport>& rows);
void write_heat_csv(std::ostream& out, const std::vector<EvalReport>& rows);

}  // namespace dunkl
