#ifndef CHROMA_VERIFICATION_HPP
#define CHROMA_VERIFICATION_HPP

#include <functional>
#include <string>
#include <vector>

#include "chroma/savings.hpp"
#include "chroma/simulator.hpp"
#include "chroma/tasks.hpp"

namespace chroma {

/// All ordered set partitions of the given items (sequences of disjoint
/// nonempty blocks covering the set).
std::vector<std::vector<std::vector<int>>> ordered_partitions(std::vector<int> items);

/// Facet list of the standard chromatic subdivision of a base simplex,
/// enumerated directly from ordered set partitions of its colors. This is
/// the independent oracle the Schlegel construction is checked against.
std::vector<Simplex> ordered_partition_facets(const Simplex& sigma);

/// Enumerates every complete crash-free interleaving of the program (no
/// memoization, so only sensible for n <= 1) and hands each schedule to the
/// callback. Prefixes of these schedules cover every crashy execution.
void for_each_complete_schedule(const ProgramConfig& cfg,
                                const std::vector<Label>& inputs,
                                const std::function<void(const std::vector<int>&)>& fn);

/// Single-round subdivision check: for every round array with d+1 distinct
/// writers, the completed scan results form a simplex of Sch^d of the
/// written values. Returns violation messages.
std::vector<std::string> check_lemma1(const ExecutionTrace& trace);

/// Multi-round trace invariants (i)-(iii) against the K=1 tower complexes,
/// plus the final-output membership in Ch(inputs) cross-checked with the
/// combinatorial oracle. `tower` must be the K=1 tower over the trace's
/// input simplex.
std::vector<std::string> check_lemma2(const ExecutionTrace& trace, const Tower& tower);

/// Runs Algorithm-1-style and Algorithm-2-style machines under the same
/// script and crash set and compares traces and outcomes.
bool scan_variants_agree(int n, const std::vector<int>& schedule,
                         const CrashSet& crashes, std::string* why = nullptr);

/// Generic-protocol schedule of the worked renaming execution: process 2
/// pairs with process 1 through rounds (1,2),(1,1) and with process 0
/// through (2,2),(2,1), at a cost of 4 writes and 12 reads.
std::vector<int> worked_example_schedule();

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
    double millis = 0.0;
};

struct VerifyConfig {
    int n = 2;
    int K = 2;
    int samples = 10000;
    std::uint64_t seed = 7;
    bool exhaustive_only = false;  // restrict to the exhaustive n=1 battery
    /// Replaces the freshly built renaming table in the soundness check
    /// (used to demonstrate detection of corrupted tables).
    const SpecializationTable* injected_table = nullptr;
};

/// The full check battery: subdivision counts, Kozlov's construction,
/// protocol-output membership (exhaustive n=1, sampled + targeted n=2),
/// per-trace round lemmas, scan-variant equivalence, renaming end-to-end,
/// and optimizer soundness with the worked cost example.
std::vector<CheckResult> verify_suite(const VerifyConfig& cfg);

}  // namespace chroma

#endif
