#pragma once

// Shared random-instance generators for the randomized test suites.

#include <random>

#include "dcx/construction.hpp"
#include "dcx/spaces.hpp"

namespace dcx::testing {

inline DiscreteSpace random_small_space(std::mt19937_64& rng) {
    switch (rng() % 4) {
        case 0: return make_graph_stars(2, 2);
        case 1: return make_graph_stars(2, 3);
        case 2: return make_graph_stars(3, 3);
        default: return make_boolean_basis(2);
    }
}

inline Subset random_subset(const GroundPtr& ground, std::mt19937_64& rng) {
    Subset s = Subset::empty(ground);
    for (int i = 0; i < ground->size(); ++i)
        if (rng() & 1) s.add(i);
    return s;
}

inline Subset random_nontrivial_subset(const GroundPtr& ground, std::mt19937_64& rng) {
    while (true) {
        Subset s = random_subset(ground, rng);
        if (!s.is_trivial()) return s;
    }
}

// Non-trivial subset with a complement of at most max_u elements.
inline Subset random_small_complement_subset(const GroundPtr& ground, std::mt19937_64& rng,
                                             int max_u) {
    int n = ground->size();
    int u = 1 + int(rng() % uint64_t(std::min(max_u, n - 1)));
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    Subset s = Subset::full(ground);
    Bitset b = s.bits();
    for (int k = 0; k < u; ++k) b.set(idx[k], false);
    return s.with_bits(b);
}

inline Ref random_ref(int n_gens, int n_prior, std::mt19937_64& rng) {
    int k = int(rng() % uint64_t(n_gens + n_prior));
    return k < n_gens ? Ref::gen(k) : Ref::step(k - n_gens);
}

inline Construction random_construction(const DiscreteSpace& space, int n_steps,
                                        std::mt19937_64& rng) {
    std::vector<Step> steps;
    int m = space.generator_count();
    for (int i = 0; i < n_steps; ++i) {
        Op op = (rng() & 1) ? Op::Union : Op::Inter;
        steps.push_back({op, random_ref(m, i, rng), random_ref(m, i, rng)});
    }
    return Construction{space, std::move(steps), {}};
}

inline CyclicSequence random_cyclic(const DiscreteSpace& space, int n_gates,
                                    std::mt19937_64& rng) {
    std::vector<Step> gates;
    int m = space.generator_count();
    for (int i = 0; i < n_gates; ++i) {
        Op op = (rng() & 1) ? Op::Union : Op::Inter;
        gates.push_back({op, random_ref(m, n_gates, rng), random_ref(m, n_gates, rng)});
    }
    int out = int(rng() % uint64_t(n_gates));
    return CyclicSequence{space, std::move(gates), out};
}

// Random construction retried until its value is non-trivial.
inline Construction random_nontrivial_construction(const DiscreteSpace& space, int n_steps,
                                                   std::mt19937_64& rng) {
    while (true) {
        Construction c = random_construction(space, n_steps, rng);
        if (!evaluate(c).value.is_trivial()) return c;
    }
}

inline CyclicSequence random_nontrivial_cyclic(const DiscreteSpace& space, int n_gates,
                                               std::mt19937_64& rng) {
    while (true) {
        CyclicSequence s = random_cyclic(space, n_gates, rng);
        if (!evaluate_cyclic(s).value.is_trivial()) return s;
    }
}

}  // namespace dcx::testing
