#include "dcx/construction.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dcx/spaces.hpp"

namespace dcx {

namespace {

void check_ref(const Ref& r, int n_gens, int limit, bool allow_any_step, int n_steps) {
    if (r.kind == Ref::Gen) {
        if (r.index < 0 || r.index >= n_gens) throw std::invalid_argument("dangling generator reference");
    } else {
        int cap = allow_any_step ? n_steps : limit;
        if (r.index < 0 || r.index >= cap)
            throw std::invalid_argument(allow_any_step ? "dangling gate reference"
                                                       : "forward or dangling step reference");
    }
}

CostTriple cost_of(const std::vector<Step>& steps) {
    CostTriple c;
    c.total = int(steps.size());
    for (const auto& s : steps)
        (s.op == Op::Inter ? c.intersections : c.unions)++;
    return c;
}

}  // namespace

void Construction::validate() const {
    int m = space.generator_count();
    for (size_t i = 0; i < steps.size(); ++i) {
        check_ref(steps[i].left, m, int(i), false, int(steps.size()));
        check_ref(steps[i].right, m, int(i), false, int(steps.size()));
    }
    if (steps.empty()) throw std::invalid_argument("construction needs at least one step");
    for (int o : outputs)
        if (o < 0 || o >= int(steps.size())) throw std::invalid_argument("output marker out of range");
}

CostTriple Construction::cost() const { return cost_of(steps); }

std::vector<int> Construction::output_steps() const {
    if (!outputs.empty()) return outputs;
    return {int(steps.size()) - 1};
}

EvalResult evaluate(const Construction& c) {
    c.validate();
    EvalResult r;
    r.step_values.reserve(c.steps.size());
    auto value_of = [&](const Ref& ref) -> const Subset& {
        return ref.kind == Ref::Gen ? c.space.generator(ref.index).set : r.step_values[ref.index];
    };
    for (const auto& s : c.steps) {
        const Subset& a = value_of(s.left);
        const Subset& b = value_of(s.right);
        r.step_values.push_back(s.op == Op::Union ? set_union(a, b) : set_intersection(a, b));
    }
    for (int o : c.output_steps()) r.values.push_back(r.step_values[o]);
    r.value = r.values.back();
    r.cost = c.cost();
    return r;
}

Construction relativize_construction(const Construction& c, const Subset& u) {
    Construction out = c;
    out.space = relativize(c.space, u);
    return out;
}

void CyclicSequence::validate() const {
    int m = space.generator_count();
    for (const auto& g : gates) {
        check_ref(g.left, m, 0, true, int(gates.size()));
        check_ref(g.right, m, 0, true, int(gates.size()));
    }
    if (gates.empty()) throw std::invalid_argument("cyclic sequence needs at least one gate");
    if (output < 0 || output >= int(gates.size()))
        throw std::invalid_argument("output gate out of range");
}

CostTriple CyclicSequence::cost() const { return cost_of(gates); }

CyclicEvalResult evaluate_cyclic(const CyclicSequence& s) {
    s.validate();
    int t = int(s.gates.size());
    std::vector<Subset> cur(t, Subset::empty(s.space.ground()));
    CyclicEvalResult r;
    r.trace.rounds.push_back(cur);
    auto value_of = [&](const Ref& ref, const std::vector<Subset>& prev) -> const Subset& {
        return ref.kind == Ref::Gen ? s.space.generator(ref.index).set : prev[ref.index];
    };
    int round = 0;
    while (true) {
        const std::vector<Subset>& prev = r.trace.rounds.back();
        std::vector<Subset> next;
        next.reserve(t);
        bool changed = false;
        for (int i = 0; i < t; ++i) {
            const Subset& a = value_of(s.gates[i].left, prev);
            const Subset& b = value_of(s.gates[i].right, prev);
            Subset v = s.gates[i].op == Op::Union ? set_union(a, b) : set_intersection(a, b);
            v = set_union(prev[i], v);
            // Monotonicity of the synchronous evaluation.
            if (!is_subset(prev[i], v)) throw std::logic_error("cyclic evaluation not monotone");
            if (v != prev[i]) changed = true;
            next.push_back(std::move(v));
        }
        ++round;
        if (!changed) break;
        r.trace.rounds.push_back(std::move(next));
        if (round > t) throw std::logic_error("cyclic evaluation exceeded the convergence bound");
    }
    r.trace.rounds_to_convergence = int(r.trace.rounds.size()) - 1;
    r.value = r.trace.rounds.back()[s.output];
    return r;
}

Ref StepBuilder::emit(Op op, Ref a, Ref b) {
    if (b < a) std::swap(a, b);
    auto key = std::make_tuple(op, a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    steps_.push_back({op, a, b});
    Ref r = Ref::step(int(steps_.size()) - 1);
    memo_.emplace(key, r);
    return r;
}

StepBuilder::Sym StepBuilder::combine(Op op, const Sym& a, const Sym& b) {
    if (op == Op::Inter) {
        if (a.empty || b.empty) return Sym::none();
        return Sym::of(emit(op, a.ref, b.ref));
    }
    if (a.empty) return b;
    if (b.empty) return a;
    if (a.ref == b.ref) return a;
    return Sym::of(emit(op, a.ref, b.ref));
}

Ref StepBuilder::materialize(const Sym& s) {
    if (s.empty) return emit_empty();
    if (s.ref.kind == Ref::Step) return s.ref;
    return emit(Op::Union, s.ref, s.ref);
}

// A step evaluating to the empty set: an empty generator if one exists,
// otherwise an intersection of two disjoint generators.
Ref StepBuilder::emit_empty() {
    for (int i = 0; i < space_.generator_count(); ++i)
        if (space_.generator(i).set.is_empty()) return emit(Op::Union, Ref::gen(i), Ref::gen(i));
    for (int i = 0; i < space_.generator_count(); ++i)
        for (int j = i; j < space_.generator_count(); ++j)
            if (!space_.generator(i).set.bits().intersects(space_.generator(j).set.bits()))
                return emit(Op::Inter, Ref::gen(i), Ref::gen(j));
    throw std::domain_error("empty value is not expressible over this family");
}

Construction prune_unreachable(const Construction& c) {
    c.validate();
    std::vector<char> keep(c.steps.size(), 0);
    std::vector<int> stack = c.output_steps();
    for (int s : stack) keep[s] = 1;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (Ref r : {c.steps[s].left, c.steps[s].right})
            if (r.kind == Ref::Step && !keep[r.index]) {
                keep[r.index] = 1;
                stack.push_back(r.index);
            }
    }
    std::vector<int> remap(c.steps.size(), -1);
    std::vector<Step> steps;
    for (size_t i = 0; i < c.steps.size(); ++i) {
        if (!keep[i]) continue;
        Step st = c.steps[i];
        if (st.left.kind == Ref::Step) st.left.index = remap[st.left.index];
        if (st.right.kind == Ref::Step) st.right.index = remap[st.right.index];
        remap[i] = int(steps.size());
        steps.push_back(st);
    }
    std::vector<int> outputs;
    for (int o : c.output_steps()) outputs.push_back(remap[o]);
    return Construction{c.space, std::move(steps), std::move(outputs)};
}

Construction unfold_cyclic(const CyclicSequence& s) {
    using Sym = StepBuilder::Sym;
    auto eval = evaluate_cyclic(s);
    int rounds = eval.trace.rounds_to_convergence;
    int t = int(s.gates.size());
    StepBuilder builder(s.space);
    std::vector<Sym> prev(t, Sym::none());
    auto sym_of = [&](const Ref& ref, const std::vector<Sym>& round) -> Sym {
        return ref.kind == Ref::Gen ? Sym::of(ref) : round[ref.index];
    };
    for (int j = 0; j < rounds; ++j) {
        std::vector<Sym> next(t);
        for (int i = 0; i < t; ++i) {
            Sym inner = builder.combine(s.gates[i].op, sym_of(s.gates[i].left, prev),
                                        sym_of(s.gates[i].right, prev));
            next[i] = builder.combine(Op::Union, prev[i], inner);
        }
        prev = std::move(next);
    }
    Ref out = builder.materialize(prev[s.output]);
    Construction c{s.space, builder.take(), {out.index}};
    auto check = evaluate(c);
    if (check.value != eval.value) throw std::logic_error("unfolding changed the computed value");
    if (!eval.value.is_empty() &&
        check.cost.intersections > s.cost().intersections * std::max(rounds, 1))
        throw std::logic_error("unfolding exceeded the intersection bound");
    return c;
}

RuleSet RuleSet::make(int m, std::vector<std::array<int, 3>> rules) {
    if (m < 1) throw std::invalid_argument("rule set needs m >= 1");
    for (const auto& r : rules)
        for (int x : r)
            if (x < 1 || x > m) throw std::invalid_argument("rule index out of [m]");
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    return {m, std::move(rules)};
}

CyclicSequence build_generation_circuit(const RuleSet& r) {
    if (r.m > 16) throw std::invalid_argument("generation circuit capped at m <= 16");
    // Inputs y_i are the positive literals of the boolean basis over {0,1}^m.
    DiscreteSpace space = make_boolean_basis(r.m);
    int m = r.m;
    int n_rules = int(r.rules.size());

    // Gate layout: f_1..f_m first, then one AND gate per rule, then the
    // fan-in-two expansions of each h_i.
    std::vector<Step> gates;
    auto f_gate = [](int i) { return Ref::step(i - 1); };
    int and_base = m;

    // Collect, per element i, the AND gates of rules producing i.
    std::vector<std::vector<int>> producers(m + 1);
    for (int k = 0; k < n_rules; ++k) producers[r.rules[k][2]].push_back(and_base + k);

    gates.resize(m);  // placeholders for f_i, filled below
    for (int k = 0; k < n_rules; ++k)
        gates.push_back({Op::Inter, f_gate(r.rules[k][0]), f_gate(r.rules[k][1])});

    for (int i = 1; i <= m; ++i) {
        Ref h;
        if (producers[i].empty()) {
            // No rule produces i: f_i = y_i ∪ y_i.
            gates[i - 1] = {Op::Union, Ref::gen(i - 1), Ref::gen(i - 1)};
            continue;
        }
        h = Ref::step(producers[i][0]);
        for (size_t k = 1; k < producers[i].size(); ++k) {
            gates.push_back({Op::Union, h, Ref::step(producers[i][k])});
            h = Ref::step(int(gates.size()) - 1);
        }
        gates[i - 1] = {Op::Union, Ref::gen(i - 1), h};
    }
    CyclicSequence s{std::move(space), std::move(gates), m - 1};
    s.validate();
    return s;
}

bool simulate_generation(const RuleSet& r, uint64_t y_mask) {
    uint64_t present = y_mask;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rule : r.rules) {
            uint64_t need = (uint64_t{1} << (rule[0] - 1)) | (uint64_t{1} << (rule[1] - 1));
            uint64_t add = uint64_t{1} << (rule[2] - 1);
            if ((present & need) == need && !(present & add)) {
                present |= add;
                changed = true;
            }
        }
    }
    return (present >> (r.m - 1)) & 1;
}

bool simulate_generation(const RuleSet& r, const Subset& y) {
    if (y.ground()->size() < r.m) throw std::invalid_argument("instance set lives over [m]");
    uint64_t mask = 0;
    for (int i = y.bits().first(); i >= 0; i = y.bits().next(i)) {
        if (i >= r.m) throw std::invalid_argument("instance set element out of [m]");
        mask |= uint64_t{1} << i;
    }
    return simulate_generation(r, mask);
}

Construction transform_by_injection(const Construction& c, const DiscreteSpace& space1,
                                    const std::vector<int>& inj,
                                    const std::vector<std::optional<Construction>>& preimages) {
    c.validate();
    const DiscreteSpace& space2 = c.space;
    if (int(inj.size()) != space1.ground()->size())
        throw std::invalid_argument("injection must map every element of the source ground set");
    {
        std::vector<char> seen(space2.ground()->size(), 0);
        for (int img : inj) {
            if (img < 0 || img >= space2.ground()->size())
                throw std::invalid_argument("injection image out of range");
            if (seen[img]) throw std::invalid_argument("map is not injective");
            seen[img] = 1;
        }
    }
    if (int(preimages.size()) != space2.generator_count())
        throw std::invalid_argument("one preimage slot per target-space generator required");

    auto pull_back = [&](const Subset& s2) {
        Subset s1 = Subset::empty(space1.ground());
        for (int e = 0; e < int(inj.size()); ++e)
            if (s2.contains(inj[e])) s1.add(e);
        return s1;
    };

    std::vector<char> used(space2.generator_count(), 0);
    for (const auto& st : c.steps) {
        if (st.left.kind == Ref::Gen) used[st.left.index] = 1;
        if (st.right.kind == Ref::Gen) used[st.right.index] = 1;
    }

    std::vector<Step> steps;
    // Where generator j of space2 is available in the transformed construction.
    std::vector<Ref> gen_ref(space2.generator_count());
    for (int j = 0; j < space2.generator_count(); ++j) {
        if (!used[j]) continue;
        Subset want = pull_back(space2.generator(j).set);
        if (preimages[j]) {
            const Construction& p = *preimages[j];
            p.validate();
            if (!p.space.ground()->same_as(*space1.ground()))
                throw std::invalid_argument("preimage construction over wrong space");
            auto ev = evaluate(p);
            if (ev.value != want)
                throw std::invalid_argument("preimage construction does not build inj^{-1}(B)");
            int base = int(steps.size());
            for (const auto& st : p.steps) {
                Step moved = st;
                if (moved.left.kind == Ref::Step) moved.left.index += base;
                if (moved.right.kind == Ref::Step) moved.right.index += base;
                steps.push_back(moved);
            }
            gen_ref[j] = Ref::step(base + p.output_steps().back());
        } else {
            auto idx = space1.find_generator(want);
            if (!idx)
                throw std::invalid_argument("preimage construction missing for generator " +
                                            space2.generator(j).name);
            gen_ref[j] = Ref::gen(*idx);
        }
    }

    int base = int(steps.size());
    auto map_ref = [&](const Ref& r) {
        return r.kind == Ref::Gen ? gen_ref[r.index] : Ref::step(r.index + base);
    };
    for (const auto& st : c.steps) steps.push_back({st.op, map_ref(st.left), map_ref(st.right)});
    std::vector<int> outputs;
    for (int o : c.output_steps()) outputs.push_back(o + base);
    Construction out{space1, std::move(steps), std::move(outputs)};
    out.validate();
    return out;
}

std::string format_construction(const Construction& c) {
    std::ostringstream os;
    os << "space " << c.space.descriptor() << "\n";
    os << "steps " << c.steps.size() << "\n";
    for (size_t i = 0; i < c.steps.size(); ++i)
        os << i << " " << (c.steps[i].op == Op::Union ? "U" : "I") << " " << c.steps[i].left.text()
           << " " << c.steps[i].right.text() << "\n";
    for (int o : c.output_steps()) os << "output s" << o << "\n";
    return os.str();
}

namespace {

Ref parse_ref(const std::string& tok) {
    if (tok.size() < 2 || (tok[0] != 'g' && tok[0] != 's'))
        throw std::invalid_argument("malformed reference: " + tok);
    int idx = std::stoi(tok.substr(1));
    return tok[0] == 'g' ? Ref::gen(idx) : Ref::step(idx);
}

struct CertBody {
    DiscreteSpace space;
    std::vector<Step> steps;
    std::vector<int> outputs;
};

CertBody parse_cert(const std::string& text,
                    const std::function<DiscreteSpace(const std::string&)>& space_lookup) {
    std::istringstream is(text);
    std::string kw;
    if (!(is >> kw) || kw != "space") throw std::invalid_argument("certificate must start with 'space'");
    std::string desc;
    is >> desc;
    CertBody body{space_lookup(desc), {}, {}};
    int n = 0;
    if (!(is >> kw >> n) || kw != "steps") throw std::invalid_argument("expected 'steps <count>'");
    for (int i = 0; i < n; ++i) {
        int idx;
        std::string op, l, r;
        if (!(is >> idx >> op >> l >> r)) throw std::invalid_argument("truncated step list");
        if (idx != i) throw std::invalid_argument("step indices must be consecutive from 0");
        if (op != "U" && op != "I") throw std::invalid_argument("step operation must be U or I");
        body.steps.push_back({op == "U" ? Op::Union : Op::Inter, parse_ref(l), parse_ref(r)});
    }
    while (is >> kw) {
        if (kw != "output") throw std::invalid_argument("unexpected trailing content: " + kw);
        std::string tok;
        is >> tok;
        Ref ref = parse_ref(tok);
        if (ref.kind != Ref::Step) throw std::invalid_argument("outputs must reference steps");
        body.outputs.push_back(ref.index);
    }
    return body;
}

}  // namespace

Construction parse_construction(
    const std::string& text, const std::function<DiscreteSpace(const std::string&)>& space_lookup) {
    auto body = parse_cert(text, space_lookup);
    Construction c{std::move(body.space), std::move(body.steps), std::move(body.outputs)};
    c.validate();
    return c;
}

std::string format_cyclic(const CyclicSequence& s) {
    std::ostringstream os;
    os << "space " << s.space.descriptor() << "\n";
    os << "steps " << s.gates.size() << "\n";
    for (size_t i = 0; i < s.gates.size(); ++i)
        os << i << " " << (s.gates[i].op == Op::Union ? "U" : "I") << " " << s.gates[i].left.text()
           << " " << s.gates[i].right.text() << "\n";
    os << "output s" << s.output << "\n";
    return os.str();
}

CyclicSequence parse_cyclic(const std::string& text,
                            const std::function<DiscreteSpace(const std::string&)>& space_lookup) {
    auto body = parse_cert(text, space_lookup);
    if (body.outputs.size() != 1)
        throw std::invalid_argument("cyclic certificate needs exactly one output");
    CyclicSequence s{std::move(body.space), std::move(body.steps), body.outputs[0]};
    s.validate();
    return s;
}

}  // namespace dcx
