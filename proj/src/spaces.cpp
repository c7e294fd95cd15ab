#include "dcx/spaces.hpp"

#include <stdexcept>

#include "dcx/construction.hpp"

namespace dcx {

namespace {

constexpr int kGroundSizeCap = 1 << 20;

void check_ground_cap(long long size) {
    if (size > kGroundSizeCap) throw std::invalid_argument("ground set exceeds the configured cap");
}

std::string subset_list_name(char prefix, uint32_t mask) {
    std::string s(1, prefix);
    s += '{';
    bool first = true;
    for (int i = 0; mask >> i; ++i) {
        if ((mask >> i) & 1) {
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
    }
    return s + '}';
}

}  // namespace

DiscreteSpace make_boolean_basis(int n) {
    if (n < 1) throw std::invalid_argument("boolean basis needs n >= 1");
    check_ground_cap(1LL << n);
    auto ground = GroundSet::hypercube(n);
    std::vector<Generator> gens;
    gens.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        Subset b = Subset::empty(ground);
        for (int v = 0; v < ground->size(); ++v)
            if ((v >> (n - 1 - i)) & 1) b.add(v);
        gens.push_back({"x" + std::to_string(i + 1), b});
    }
    for (int i = 0; i < n; ++i)
        gens.push_back({"~x" + std::to_string(i + 1), set_complement(gens[i].set)});
    return DiscreteSpace(ground, std::move(gens), "bool:" + std::to_string(n));
}

DiscreteSpace make_monotone_basis(int n) {
    if (n < 1) throw std::invalid_argument("monotone basis needs n >= 1");
    check_ground_cap(1LL << n);
    auto ground = GroundSet::hypercube(n);
    std::vector<Generator> gens;
    gens.reserve(n + 2);
    for (int i = 0; i < n; ++i) {
        Subset b = Subset::empty(ground);
        for (int v = 0; v < ground->size(); ++v)
            if ((v >> (n - 1 - i)) & 1) b.add(v);
        gens.push_back({"x" + std::to_string(i + 1), b});
    }
    gens.push_back({"empty", Subset::empty(ground)});
    gens.push_back({"ones", Subset::full(ground)});
    return DiscreteSpace(ground, std::move(gens), "mono:" + std::to_string(n));
}

DiscreteSpace make_graph_stars(int rows, int cols) {
    check_ground_cap(1LL * rows * cols);
    auto ground = GroundSet::grid(rows, cols);
    std::vector<Generator> gens;
    gens.reserve(rows + cols);
    for (int i = 1; i <= rows; ++i) {
        Subset r = Subset::empty(ground);
        for (int j = 1; j <= cols; ++j) r.add(ground->grid_index(i, j));
        gens.push_back({"R" + std::to_string(i), r});
    }
    for (int j = 1; j <= cols; ++j) {
        Subset c = Subset::empty(ground);
        for (int i = 1; i <= rows; ++i) c.add(ground->grid_index(i, j));
        gens.push_back({"C" + std::to_string(j), c});
    }
    return DiscreteSpace(ground, std::move(gens),
                         "stars:" + std::to_string(rows) + "x" + std::to_string(cols));
}

DiscreteSpace make_clique_family(int rows, int cols) {
    if (rows > 12 || cols > 12) throw std::invalid_argument("clique family refuses N,M > 12");
    auto ground = GroundSet::grid(rows, cols);
    std::vector<Generator> gens;
    gens.reserve((size_t{1} << rows) + (size_t{1} << cols));
    for (uint32_t s = 0; s < (uint32_t{1} << rows); ++s) {
        Subset w = Subset::empty(ground);
        for (int i = 1; i <= rows; ++i)
            if ((s >> (i - 1)) & 1)
                for (int j = 1; j <= cols; ++j) w.add(ground->grid_index(i, j));
        gens.push_back({subset_list_name('W', s), w});
    }
    for (uint32_t t = 0; t < (uint32_t{1} << cols); ++t) {
        Subset z = Subset::empty(ground);
        for (int j = 1; j <= cols; ++j)
            if ((t >> (j - 1)) & 1)
                for (int i = 1; i <= rows; ++i) z.add(ground->grid_index(i, j));
        gens.push_back({subset_list_name('Z', t), z});
    }
    return DiscreteSpace(ground, std::move(gens),
                         "clique:" + std::to_string(rows) + "x" + std::to_string(cols));
}

DiscreteSpace make_rectangles(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("rectangle family refuses N > 4");
    auto ground = GroundSet::grid(n, n);
    std::vector<Generator> gens;
    gens.reserve(size_t{1} << (2 * n));
    for (uint32_t u = 0; u < (uint32_t{1} << n); ++u)
        for (uint32_t v = 0; v < (uint32_t{1} << n); ++v) {
            Subset r = Subset::empty(ground);
            for (int i = 1; i <= n; ++i)
                if ((u >> (i - 1)) & 1)
                    for (int j = 1; j <= n; ++j)
                        if ((v >> (j - 1)) & 1) r.add(ground->grid_index(i, j));
            gens.push_back({subset_list_name('U', u) + subset_list_name('V', v), r});
        }
    return DiscreteSpace(ground, std::move(gens), "rect:" + std::to_string(n));
}

DiscreteSpace make_tensor_stars(int n, int dim) {
    if (n < 1 || dim < 1) throw std::invalid_argument("tensor space needs positive parameters");
    long long size = 1;
    for (int d = 0; d < dim; ++d) {
        size *= n;
        check_ground_cap(size);
    }
    auto ground = GroundSet::plain(int(size));
    // Element index encodes coordinates in row-major order, last coordinate
    // fastest; matches the grid layout at dim = 2.
    std::vector<Generator> gens;
    gens.reserve(size_t(dim) * n);
    for (int p = 0; p < dim; ++p) {
        long long stride = 1;
        for (int q = p + 1; q < dim; ++q) stride *= n;
        for (int a = 0; a < n; ++a) {
            Subset s = Subset::empty(ground);
            for (int idx = 0; idx < int(size); ++idx)
                if ((idx / stride) % n == a) s.add(idx);
            gens.push_back(
                {"fix" + std::to_string(p + 1) + "=" + std::to_string(a + 1), std::move(s)});
        }
    }
    return DiscreteSpace(ground, std::move(gens),
                         "tensor:" + std::to_string(n) + "^" + std::to_string(dim));
}

namespace {

std::pair<int, int> parse_dims(const std::string& s, char sep) {
    auto pos = s.find(sep);
    if (pos == std::string::npos) throw std::invalid_argument("expected <N>" + std::string(1, sep) + "<M>");
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
}

}  // namespace

DiscreteSpace parse_space(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unknown space descriptor: " + descriptor);
    std::string kind = descriptor.substr(0, colon);
    std::string rest = descriptor.substr(colon + 1);
    try {
        if (kind == "stars") {
            auto [n, m] = parse_dims(rest, 'x');
            return make_graph_stars(n, m);
        }
        if (kind == "bool") return make_boolean_basis(std::stoi(rest));
        if (kind == "mono") return make_monotone_basis(std::stoi(rest));
        if (kind == "clique") {
            auto [n, m] = parse_dims(rest, 'x');
            return make_clique_family(n, m);
        }
        if (kind == "rect") return make_rectangles(std::stoi(rest));
        if (kind == "tensor") {
            auto [n, d] = parse_dims(rest, '^');
            return make_tensor_stars(n, d);
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed space descriptor: " + descriptor);
    }
    throw std::invalid_argument("unknown space descriptor: " + descriptor);
}

int num_of_string(const std::string& w) {
    int v = 0;
    for (char c : w) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string must be 0/1");
        v = v * 2 + (c - '0');
    }
    return v;
}

std::string binary_of_int(int u, int n) {
    if (u < 1 || u > (1 << n)) throw std::invalid_argument("integer out of [N]");
    std::string w(n, '0');
    int v = u - 1;
    for (int b = 0; b < n; ++b)
        if ((v >> (n - 1 - b)) & 1) w[b] = '1';
    return w;
}

std::string phi_forward(int n, int u, int v) { return binary_of_int(u, n) + binary_of_int(v, n); }

std::pair<int, int> phi_backward(int n, const std::string& w) {
    if (int(w.size()) != 2 * n) throw std::invalid_argument("phi string has wrong length");
    return {num_of_string(w.substr(0, n)) + 1, num_of_string(w.substr(n)) + 1};
}

namespace {

int log2_exact(int n) {
    int b = 0;
    while ((1 << b) < n) ++b;
    if ((1 << b) != n) throw std::invalid_argument("N must be a power of two");
    return b;
}

}  // namespace

Subset function_from_graph(const Subset& g) {
    const auto& gr = g.ground();
    if (gr->kind() != GroundKind::Grid || gr->rows() != gr->cols())
        throw std::invalid_argument("expected a square grid ground set");
    int n = log2_exact(gr->rows());
    auto cube = GroundSet::hypercube(2 * n);
    Subset out = Subset::empty(cube);
    for (int idx = g.bits().first(); idx >= 0; idx = g.bits().next(idx)) {
        auto [u, v] = gr->grid_coords(idx);
        out.add(cube->cube_index(phi_forward(n, u, v)));
    }
    return out;
}

Subset graph_from_function(const Subset& f) {
    const auto& gr = f.ground();
    if (gr->kind() != GroundKind::Hypercube || gr->bits() % 2 != 0)
        throw std::invalid_argument("expected a hypercube ground set of even dimension");
    int n = gr->bits() / 2;
    auto grid = GroundSet::grid(1 << n, 1 << n);
    Subset out = Subset::empty(grid);
    for (int idx = f.bits().first(); idx >= 0; idx = f.bits().next(idx)) {
        auto [u, v] = phi_backward(n, gr->cube_string(idx));
        out.add(grid->grid_index(u, v));
    }
    return out;
}

Subset make_neq(int n) {
    auto ground = GroundSet::grid(n, n);
    Subset s = Subset::empty(ground);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) s.add(ground->grid_index(i, j));
    return s;
}

Subset make_chessboard(int rows, int cols) {
    auto ground = GroundSet::grid(rows, cols);
    Subset s = Subset::empty(ground);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            if ((i + j) % 2 == 0) s.add(ground->grid_index(i, j));
    return s;
}

Subset parse_target(const GroundPtr& ground, const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        if (kind == "neq") {
            Subset s = make_neq(std::stoi(rest));
            if (!s.ground()->same_as(*ground))
                throw std::invalid_argument("neq target does not match the space's ground set");
            return Subset(ground, s.bits());
        }
        if (kind == "chess") {
            auto [n, m] = parse_dims(rest, 'x');
            Subset s = make_chessboard(n, m);
            if (!s.ground()->same_as(*ground))
                throw std::invalid_argument("chess target does not match the space's ground set");
            return Subset(ground, s.bits());
        }
        throw std::invalid_argument("unknown catalog target: " + spec);
    }
    return parse_subset(ground, spec);
}

std::vector<int> phi_index_map(int n) {
    int N = 1 << n;
    auto grid = GroundSet::grid(N, N);
    auto cube = GroundSet::hypercube(2 * n);
    std::vector<int> inj(grid->size());
    for (int u = 1; u <= N; ++u)
        for (int v = 1; v <= N; ++v)
            inj[grid->grid_index(u, v)] = cube->cube_index(phi_forward(n, u, v));
    return inj;
}

std::vector<std::optional<Construction>> star_preimage_constructions(int n) {
    int N = 1 << n;
    DiscreteSpace stars = make_graph_stars(N, N);
    std::vector<std::optional<Construction>> out;
    out.reserve(4 * n);
    // bool:2n generator order: x1..x2n then ~x1..~x2n.
    for (int neg = 0; neg < 2; ++neg)
        for (int i = 1; i <= 2 * n; ++i) {
            bool row_side = i <= n;
            int bit = row_side ? i : i - n;
            std::vector<int> members;  // star generator indices
            for (int a = 1; a <= N; ++a) {
                bool one = binary_of_int(a, n)[bit - 1] == '1';
                if (one != bool(neg)) members.push_back(row_side ? a - 1 : N + a - 1);
            }
            if (members.size() == 1) {
                out.push_back(std::nullopt);  // the preimage is itself a star
                continue;
            }
            std::vector<Step> steps;
            Ref acc = Ref::gen(members[0]);
            for (size_t k = 1; k < members.size(); ++k) {
                steps.push_back({Op::Union, acc, Ref::gen(members[k])});
                acc = Ref::step(int(steps.size()) - 1);
            }
            out.push_back(Construction{stars, std::move(steps), {}});
        }
    return out;
}

Construction chessboard_figure1_construction() {
    DiscreteSpace space = make_graph_stars(5, 5);
    // Generators: R1..R5 = g0..g4, C1..C5 = g5..g9.
    std::vector<Step> steps = {
        {Op::Union, Ref::gen(0), Ref::gen(2)},   // s0 = R1 ∪ R3
        {Op::Union, Ref::step(0), Ref::gen(4)},  // s1 = s0 ∪ R5
        {Op::Union, Ref::gen(5), Ref::gen(7)},   // s2 = C1 ∪ C3
        {Op::Union, Ref::step(2), Ref::gen(9)},  // s3 = s2 ∪ C5
        {Op::Inter, Ref::step(1), Ref::step(3)}, // s4 = odd rows ∩ odd columns
        {Op::Union, Ref::gen(1), Ref::gen(3)},   // s5 = R2 ∪ R4
        {Op::Union, Ref::gen(6), Ref::gen(8)},   // s6 = C2 ∪ C4
        {Op::Inter, Ref::step(5), Ref::step(6)}, // s7 = even rows ∩ even columns
        {Op::Union, Ref::step(4), Ref::step(7)},
    };
    return Construction{std::move(space), std::move(steps), {}};
}

Subset duality_target(const Subset& f) {
    const auto& gr = f.ground();
    if (gr->kind() != GroundKind::Hypercube)
        throw std::invalid_argument("duality needs a hypercube ground set");
    int k = gr->bits();
    auto big = GroundSet::hypercube(k + 1);
    Subset out = Subset::empty(big);
    int half = 1 << k;
    for (int z = 0; z < half; ++z) {
        bool fz = f.contains(z);
        if (fz) out.add(half + z);  // first bit 1: F(1,z) = f(z)
        if (!fz) out.add(z);        // first bit 0: F(0,z) = 1 - f(z)
    }
    return out;
}

}  // namespace dcx
