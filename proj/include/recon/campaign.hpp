#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "recon/model.hpp"

namespace recon {

struct CampaignParams {
    int n_max = 6;          // size cap for enumeration sweeps
    unsigned seed = 0;      // seed for randomized campaigns
    int count = 50;         // seeded host count (closure campaign)
    int fuzz = 1000;        // invocations per planner (fuzz campaign)
    std::uint64_t budget = kDefaultEnumerationBudget;
    int workers = 0;        // 0 = hardware concurrency
};

enum class Verdict { pass, fail, skipped };

struct InstanceResult {
    std::string descriptor;
    Verdict verdict = Verdict::pass;
    std::string detail;
};

struct CampaignReport {
    std::string name;
    std::string params_header;  // campaign inputs incl. seed; deterministic
    std::vector<InstanceResult> instances;
    long long wall_ms = 0;      // measured; never part of the stable output
    int passed() const;
    int failed() const;
    int skipped() const;
    bool ok() const { return failed() == 0; }
};

// Known campaigns: k2-characterization, k3-3connected, k4-bases,
// structural-lemmas, planner-fuzz, split-addedge-closure.  Instances run
// in a worker pool; results are merged in instance order, so the report is
// reproducible given identical inputs and seeds.
CampaignReport run_campaign(const std::string& name, const CampaignParams& params);

std::vector<std::string> campaign_names();

// Deterministic text report (timing deliberately excluded).
void write_report(const CampaignReport& report, std::ostream& out);

}  // namespace recon
