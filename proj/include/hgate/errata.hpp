#pragma once

#include <string>
#include <vector>

namespace hgate {

/// One discrepancy found while reconciling the transcribed closed-form
/// construction against the first-principles derivation.
struct ErrataEntry {
    std::string id;
    std::string anchor;      // stable slug locating the issue in the source construction
    std::string summary;
    std::string resolution;
};

/// The five documented transcription discrepancies, in fixed order.
const std::vector<ErrataEntry>& errata_entries();

/// Full reconciliation report: the discrepancy list, the chain-completion
/// diagnostics, and the literal-vs-derived connection coefficient table over
/// a fixed parameter grid. Deterministic; byte-identical across runs.
std::string errata_report();

} // namespace hgate
