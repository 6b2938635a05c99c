#pragma once

#include <cstdint>
#include <string>

namespace extremal {

// Counters threaded through the search primitives. Every BFS-like linear
// pass (BFS, multi-source BFS, LexBFS) bumps `search_runs`; `work` counts
// vertices popped plus adjacency entries scanned, so it tracks actual
// effort rather than wall time.
struct SearchStats {
    std::int64_t search_runs = 0;
    std::int64_t work = 0;

    void add_run(std::int64_t touched) {
        ++search_runs;
        work += touched;
    }
};

// Per-result bookkeeping surfaced by the CLI and asserted by tests.
struct RunStats {
    std::int64_t search_runs = 0;
    std::int64_t work = 0;
    int cutoff = 0;
    int delta_star = -1;     // -1 when the run was not oblivious
    int t = 0;               // dominating-path rounds
    int extremities_computed = 0;
    bool promise_violated = false;
    bool center_fallback = false;
    std::string branch;      // which top-level branch produced the result
};

} // namespace extremal
