#pragma once

#include <array>
#include <string>
#include <vector>

#include "rdw/batch.hpp"
#include "rdw/chi_square.hpp"
#include "rdw/fit.hpp"
#include "rdw/pipeline.hpp"

namespace rdw {

// All emitters build the full file content in memory; callers write it with
// one csv::write_file so every artifact has a single writer.

// trial_id,group,target_gain,t1,max_gain_reached,physical_distance,response
std::string summary_csv(const std::vector<TrialSummary>& rows);

// t,phys_x,phys_z,virtual_dist,deg,attention,gain
std::string frame_csv(const TrialTrace& trace);

// gain,n,k
std::string dataset_csv(const ResponseDataset& data);

// gain,empirical_proportion,fitted_psi,marker: 200 curve samples over
// [0.5, 1.5], the empirical proportions, then ldt/pse/udt marker rows.
std::string plot_csv(const ResponseDataset& data, const PsyFit& fit);

// group,ldt,pse,udt,aic,sse,pse_ci_low,pse_ci_high,n_trials,n_excluded
std::string table_csv(const std::vector<GroupReport>& reports);

// sequence,position,gain
std::string sequences_csv(const std::vector<std::vector<double>>& pool);

// JSON object with exactly: params, nll, aic, sse, pse, ldt, udt, pse_ci,
// converged.
std::string fit_report_json(const PsyFit& fit);

// Rise-time distribution plus run bookkeeping; stats fields are null when no
// trial recorded a rise time.
std::string t1_stats_json(const T1Stats& stats, long excluded, long bounds_violations);

std::string chisq_json(const std::array<std::array<long, 2>, 2>& table,
                       const ChiSquareResult& result);

}  // namespace rdw
