#pragma once

#include <filesystem>

#include "catjc/scenario.hpp"

namespace catjc {

// Writes a time series to `path` (parent directories are created). CSV has
// the fixed header
//   tau,E_x,E_y,H_x,H_y,H_z,V_x,V_y,exp_x,exp_y,exp_z,rho_ee,re_rho_eg,im_rho_eg,entropy_sum_slack
// and 17-significant-digit floats; JSON mirrors the same per-sample fields
// plus a config echo (and the validation block when present). Output is
// byte-identical across runs for identical input. Throws IoError on any
// filesystem failure.
void emit(const TimeSeries& series, const std::filesystem::path& path, OutputFormat format);

// The comparison table of run_rho_c_compare in the same two formats.
void emit_rho_c_table(std::span<const RhoCDeviationRow> rows,
                      const std::filesystem::path& path, OutputFormat format);

} // namespace catjc
