#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "dcx/construction.hpp"
#include "dcx/core.hpp"

namespace dcx {

// Upward-closed family over a universe U, stored by its minimal antichain.
// Membership reduces to "some minimal element is contained in the query".
class SemiFilter {
public:
    SemiFilter(Subset universe, std::vector<Subset> minimal);  // validates the antichain
    // Upward closure of an arbitrary non-empty list of non-empty subsets of U.
    static SemiFilter upward_closure(Subset universe, const std::vector<Subset>& sets);

    const Subset& universe() const { return universe_; }
    const std::vector<Subset>& minimal() const { return minimal_; }

    bool contains(const Subset& s) const;
    // Semi-ultra test: no bipartition of U splits every minimal set.
    bool is_ultra() const;

    bool operator==(const SemiFilter& o) const {
        return universe_ == o.universe_ && minimal_ == o.minimal_;
    }

private:
    Subset universe_;
    std::vector<Subset> minimal_;
};

enum class FamilyClass { NotSemiFilter, SemiFilter, SemiUltraFilter };

// Strict check of a candidate minimal-antichain representation.
FamilyClass classify_family(const std::vector<Subset>& minimal, const Subset& universe);

struct LambdaPair {
    Subset e, h;  // canonical: e <= h in bit-string order
    bool operator==(const LambdaPair&) const = default;
};

// A collection of unordered pairs of subsets of U, deduplicated and sorted.
struct Lambda {
    Subset universe;
    std::vector<LambdaPair> pairs;

    static Lambda make(Subset universe, std::vector<LambdaPair> pairs);
    static Lambda empty(Subset universe) { return make(std::move(universe), {}); }
    int size() const { return int(pairs.size()); }
};

// Above-ness with respect to a family and U = A^c: every generator through w
// must appear relativized in the filter.
bool is_above(const SemiFilter& f, int w, const DiscreteSpace& space, const Subset& u);

// Preservation: E in F and H in F force E ∩ H in F, for every pair.
bool preserves(const SemiFilter& f, const Lambda& lambda);
// A pair covers a filter when preservation fails for it.
bool covers(const SemiFilter& f, const LambdaPair& p);

// All semi-filters over U (|U| <= 5; counts are Dedekind numbers minus two).
std::vector<SemiFilter> enumerate_semifilters(const Subset& universe, bool ultra_only);

// Closure G_w: the minimal family forced into any semi-filter above w that
// preserves lambda. empty_reached characterizes membership of w in A.
struct ClosureResult {
    bool empty_reached = false;
    std::vector<Subset> minimal;  // the antichain reached (meaningless once empty_reached)
};
ClosureResult closure_gw(int w, const DiscreteSpace& space, const Subset& u,
                         const Lambda& lambda);

enum class VerifyMode { Closure, Enumerate };

struct VerifyResult {
    bool valid = false;
    // closure mode: offending element; enumerate mode: offending (filter, a).
    std::optional<int> witness_element;
    std::optional<SemiFilter> witness_filter;
    std::optional<int> witness_above;
};

// Is lambda a valid cover for A over the space? Closure mode runs Claim-style
// per-element closures; enumerate mode checks every (ultra) semi-filter.
VerifyResult verify_lambda(const Subset& a, const DiscreteSpace& space, const Lambda& lambda,
                           VerifyMode mode, bool ultra_only = false, int jobs = 1);

// Intersection pairs of a computation, relativized to U = A^c. Cyclic sources
// use converged gate values.
Lambda extract_lambda(const Construction& c, const Subset& a);
Lambda extract_lambda(const CyclicSequence& s, const Subset& a);

// Provenance-tagged working set for the compilers.
struct OmegaEntry {
    enum Tag { GenU, PairE, PairH, PairEH, EmptySet } tag;
    int index;     // generator index or pair index
    Subset value;  // subset of U
};

struct CompileTrace {
    std::vector<OmegaEntry> omega;
    // stage_s[j][k] / stage_t[j][k]: value of S^{j+1} / T^{j+1} at entry k.
    std::vector<std::vector<Subset>> stage_s, stage_t;
};

// Cyclic sequence with exactly |lambda| intersection gates evaluating to A.
CyclicSequence compile_lambda_cyclic(const Subset& a, const DiscreteSpace& space,
                                     const Lambda& lambda, CompileTrace* trace = nullptr);
// Acyclic construction with at most |lambda|^2 intersections evaluating to A.
Construction compile_lambda_acyclic(const Subset& a, const DiscreteSpace& space,
                                    const Lambda& lambda, CompileTrace* trace = nullptr);

// Candidate pairs for the cover search: unordered, incomparable members only
// (inert pairs cover no semi-filter), in canonical certificate order.
std::vector<LambdaPair> candidate_pairs(const Subset& universe);

struct CoverGraph {
    Subset universe;
    std::vector<LambdaPair> pairs;
    std::vector<SemiFilter> filters;   // semi-filters above some a in A
    std::vector<Bitset> covered_by;    // per pair: bit f set iff pair covers filter f
};

// Materialized cover graph; requires |U| <= 4 so the filter side enumerates.
CoverGraph build_cover_graph(const Subset& a, const DiscreteSpace& space,
                             int pair_universe_cap = 4);

// Canonical semi-filters of a graph over stars: for each edge (u,v) of G the
// upward closure of { R_u ∩ Ḡ, C_v ∩ Ḡ }, kept when both sets are non-empty.
std::vector<std::pair<int, SemiFilter>> canonical_filters(const Subset& g);
bool covers_canonical(const LambdaPair& pair, const SemiFilter& edge_filter);

// Pair-wise preimage under phi: a cover for f_G^{-1}(1) over bool:2n induces
// a cover for G over stars.
Lambda induce_lambda(const Lambda& lambda_fn, int n);

// Certificate text form for Lambda (header + two 0/1 lines per pair over U's
// positions in canonical order).
std::string format_lambda(const Lambda& lambda, const DiscreteSpace& space, const Subset& a);
Lambda parse_lambda(const std::string& text,
                    const std::function<DiscreteSpace(const std::string&)>& space_lookup,
                    DiscreteSpace* space_out = nullptr, Subset* target_out = nullptr);

}  // namespace dcx
