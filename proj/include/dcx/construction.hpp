#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dcx/core.hpp"

namespace dcx {

enum class Op : uint8_t { Union, Inter };

// Reference to a generator (by family index) or to a step/gate (by index).
struct Ref {
    enum Kind : uint8_t { Gen, Step } kind = Gen;
    int index = 0;

    static Ref gen(int i) { return {Gen, i}; }
    static Ref step(int i) { return {Step, i}; }
    bool operator==(const Ref&) const = default;
    // Canonical order: generators before steps, then by index.
    auto operator<=>(const Ref& o) const {
        if (kind != o.kind) return kind <=> o.kind;
        return index <=> o.index;
    }
    std::string text() const { return (kind == Gen ? "g" : "s") + std::to_string(index); }
};

struct Step {
    Op op;
    Ref left, right;
    bool operator==(const Step&) const = default;
};

struct CostTriple {
    int total = 0;
    int intersections = 0;
    int unions = 0;
    bool operator==(const CostTriple&) const = default;
};

// Straight-line construction: every step references generators or strictly
// earlier steps. Outputs mark the step indices whose values are the targets;
// empty means the last step.
struct Construction {
    DiscreteSpace space;
    std::vector<Step> steps;
    std::vector<int> outputs;

    void validate() const;  // throws on dangling/forward references
    CostTriple cost() const;
    std::vector<int> output_steps() const;
};

struct EvalResult {
    Subset value;                 // value of the last output
    std::vector<Subset> values;   // one per marked output, in marker order
    std::vector<Subset> step_values;
    CostTriple cost;
};

EvalResult evaluate(const Construction& c);

// Same step structure over the relativized family; evaluates to old value ∩ U.
Construction relativize_construction(const Construction& c, const Subset& u);

// Syntactic sequence whose gates may reference any gate, including themselves
// and later ones. Evaluated as a monotone least fixed point from all-empty.
struct CyclicSequence {
    DiscreteSpace space;
    std::vector<Step> gates;
    int output = 0;

    void validate() const;
    CostTriple cost() const;
};

struct EvalTrace {
    // rounds[j][i] = value of gate i before round j+1; rounds[0] is all-empty.
    std::vector<std::vector<Subset>> rounds;
    int rounds_to_convergence = 0;
};

struct CyclicEvalResult {
    Subset value;
    EvalTrace trace;
};

CyclicEvalResult evaluate_cyclic(const CyclicSequence& s);

// Acyclic construction with the same value. Intersection count is bounded by
// (#∩ gates) x (rounds to convergence); see notes on empty-valued sequences.
Construction unfold_cyclic(const CyclicSequence& s);

// Generation problem: rules (a,b,c) add c once a and b are present; accept
// when the top element m is reached.
struct RuleSet {
    int m = 0;
    std::vector<std::array<int, 3>> rules;  // deduplicated, sorted on build

    static RuleSet make(int m, std::vector<std::array<int, 3>> rules);
};

// Cyclic monotone circuit over bool:m positive inputs with exactly |rules|
// intersection gates; its converged output is the accepted-input set.
CyclicSequence build_generation_circuit(const RuleSet& r);
bool simulate_generation(const RuleSet& r, const Subset& y);
bool simulate_generation(const RuleSet& r, uint64_t y_mask);

// Lemma-style transformation through an injective map inj: G1 -> G2 given as
// element index mapping. preimages[j] builds inj^{-1}(B2_j) over space1; a
// missing entry is resolved against space1's generators by value.
Construction transform_by_injection(const Construction& c, const DiscreteSpace& space1,
                                    const std::vector<int>& inj,
                                    const std::vector<std::optional<Construction>>& preimages);

// Incremental step assembly with duplicate-step reuse and symbolic handling
// of known-empty values (∅ ∪ X = X, ∅ ∩ X = ∅).
class StepBuilder {
public:
    struct Sym {
        bool empty = true;
        Ref ref;
        static Sym none() { return {}; }
        static Sym of(Ref r) { return {false, r}; }
    };

    explicit StepBuilder(const DiscreteSpace& space) : space_(space) {}

    Ref emit(Op op, Ref a, Ref b);
    Sym combine(Op op, const Sym& a, const Sym& b);
    // Ensure the symbol names a step (self-union for generators, a synthesized
    // empty-set step for the empty symbol).
    Ref materialize(const Sym& s);
    std::vector<Step> take() { return std::move(steps_); }
    int step_count() const { return int(steps_.size()); }

private:
    Ref emit_empty();

    const DiscreteSpace& space_;
    std::vector<Step> steps_;
    std::map<std::tuple<Op, Ref, Ref>, Ref> memo_;
};

// Steps reachable from the outputs, references renumbered.
Construction prune_unreachable(const Construction& c);

// Certificate text form (canonical, bit-exact).
std::string format_construction(const Construction& c);
Construction parse_construction(const std::string& text,
                                const std::function<DiscreteSpace(const std::string&)>& space_lookup);
std::string format_cyclic(const CyclicSequence& s);
CyclicSequence parse_cyclic(const std::string& text,
                            const std::function<DiscreteSpace(const std::string&)>& space_lookup);

}  // namespace dcx
