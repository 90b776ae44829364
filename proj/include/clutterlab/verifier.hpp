#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clutterlab/families.hpp"
#include "clutterlab/field.hpp"
#include "clutterlab/ideal.hpp"

namespace clutterlab {

enum class TheoremId {
    L3_1, T3_2, T3_3, L3_4, R3_5, L3_6, L3_7, L3_9, O3_10, L3_11,
    T4_7, T4_8, T4_9, T4_11, T4_13, T5_1, T5_2, C5_3, E5_6,
    L6_1, T6_2, T6_3, T6_5,
};

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
std::vector<TheoremId> all_theorems();

struct CheckSpec {
    TheoremId id;
    int max_n = -1;  // -1 means the per-check default
    int max_m = -1;
    int max_r = -1;
    int max_q = -1;
    int instances = -1;
    uint64_t budget = 10'000'000;
    std::vector<uint64_t> seeds = {1, 2, 3, 4, 5};
    FieldSpec field = FieldSpec::gf2();
};

enum class Outcome { pass, fail, inconclusive };

struct Verdict {
    TheoremId id;
    std::string instance;
    Outcome outcome;
    std::string witness;  // required for fail; notes otherwise
    double seconds = 0;
};

std::vector<Verdict> run_check(const CheckSpec& spec);

struct SuiteReport {
    std::vector<Verdict> verdicts;
    bool all_pass = false;
    bool covered = false;  // every theorem id produced at least one pass
    bool green() const { return all_pass && covered; }
};

/// Runs every check with default parameters on a work queue of `threads`
/// workers (0 consults CLUTTERLAB_THREADS, then hardware concurrency).
SuiteReport run_all(uint64_t budget = 10'000'000, int threads = 0);

std::string verdicts_to_json(const std::vector<Verdict>& verdicts);

// --- suite building blocks, exposed for the test binaries ---

/// All graphs on exactly n vertices up to isomorphism (n <= 7), optionally
/// connected only.
std::vector<Graph> graphs_up_to_iso(int n, bool connected_only);

/// Seeded co-chordal-cactus instance for a named skeleton shape:
/// edge, p3, p4, c3, c4, c5, star3, paw.
CoChordalCactusInstance cactus_instance(const std::string& shape, uint64_t seed);
std::vector<std::string> cactus_path_shapes();   // edge, p3, p4
std::vector<std::string> cactus_cycle_shapes();  // c3, c4, c5
std::vector<std::string> cactus_all_shapes();

/// The 7-vertex chordal graph whose edge ideal has the eleven quadratic
/// generators used as the regularity counterexample.
Graph counterexample_graph_7();

/// Sturmfels' squarefree ideal (def, cef, cdf, cde, bef, bcd, acf, ade) in
/// six variables.
MonomialIdeal sturmfels_ideal();

}  // namespace clutterlab
