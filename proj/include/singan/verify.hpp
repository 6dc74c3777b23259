#pragma once

#include "singan/boundary.hpp"
#include "singan/cycles.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace singan {

struct VerificationResult {
    std::string claim;
    std::string search_space;  // bounds actually scanned; never silently truncated
    bool holds = false;
    std::optional<Cycle> witness;           // violating cycle, or reported minimizer
    std::optional<Rational> extremal_value;
    std::vector<std::string> notes;
};

/// Exhaustive check that the computed fundamental cycle is the least nonzero
/// effective solution of Z'.F_j <= 0 within 0 <= z'_j <= cap.
/// Throws if cap < max z_j.
VerificationResult verify_fundamental_minimality(const DualGraph& g, int cap);

/// Scan Z' with 1 <= z'_j <= z_j + headroom. On log-terminal germs asserts
/// delta_y <= delta' and [delta' = delta_y => Z' <= Z]; otherwise runs in
/// exploration mode and only reports findings. exercise_lc additionally labels
/// the run as the log-canonical exploration.
VerificationResult verify_prop_2_10(const DualGraph& g, int headroom, bool exercise_lc = false);

/// (a) at most one vertex with (Z-Delta).F_j > 0, and then (Z-Delta).F_j = 1, w_j >= 3;
/// (b) at most one vertex with z_j >= 2 and (Z-Delta).F_j < 0, and then z_j = 2,
///     (Z-Delta).F_j = -1.
/// Throws if the germ is not log-terminal.
VerificationResult verify_tech_lemma(const DualGraph& g);

/// Rerun the Laufer iteration under `trials` random tie-break orders and check
/// all runs agree.
VerificationResult verify_laufer_order_independence(const DualGraph& g, int trials,
                                                    std::uint64_t seed);

/// Seeded generator for the randomized property suites: random trees up to 9
/// vertices, weights in [2,6], genus 0 with an occasional genus <= 2 vertex,
/// rejection-sampled to negative definiteness.
class RandomGraphGenerator {
public:
    explicit RandomGraphGenerator(std::uint64_t seed) : seed_(seed), rng_(seed) {}

    std::uint64_t seed() const { return seed_; }

    DualGraph random_graph();
    DualGraph random_lt_graph();
    std::pair<DualGraph, BoundarySpec> random_lt_triple();

private:
    DualGraph random_tree(bool allow_genus);
    DualGraph random_chain();

    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

/// Seed from SINGAN_SEED when set, else the given default.
std::uint64_t effective_seed(std::uint64_t fallback);

}  // namespace singan
