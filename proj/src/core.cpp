#include "dcx/core.hpp"

#include <cctype>
#include <stdexcept>

namespace dcx {

std::shared_ptr<const GroundSet> GroundSet::plain(int n) {
    if (n < 1) throw std::invalid_argument("ground set needs at least one element");
    auto g = std::shared_ptr<GroundSet>(new GroundSet());
    g->size_ = n;
    g->kind_ = GroundKind::Plain;
    g->labels_.reserve(n);
    for (int i = 1; i <= n; ++i) g->labels_.push_back("e" + std::to_string(i));
    return g;
}

std::shared_ptr<const GroundSet> GroundSet::grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
    auto g = std::shared_ptr<GroundSet>(new GroundSet());
    g->size_ = rows * cols;
    g->kind_ = GroundKind::Grid;
    g->rows_ = rows;
    g->cols_ = cols;
    g->labels_.reserve(g->size_);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            g->labels_.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    return g;
}

std::shared_ptr<const GroundSet> GroundSet::hypercube(int nbits) {
    if (nbits < 1 || nbits > 20) throw std::invalid_argument("hypercube dimension out of range");
    auto g = std::shared_ptr<GroundSet>(new GroundSet());
    g->size_ = 1 << nbits;
    g->kind_ = GroundKind::Hypercube;
    g->bits_ = nbits;
    g->labels_.reserve(g->size_);
    for (int v = 0; v < g->size_; ++v) {
        std::string w(nbits, '0');
        for (int b = 0; b < nbits; ++b)
            if ((v >> (nbits - 1 - b)) & 1) w[b] = '1';
        g->labels_.push_back(w);
    }
    return g;
}

int GroundSet::grid_index(int i, int j) const {
    if (kind_ != GroundKind::Grid) throw std::invalid_argument("not a grid ground set");
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::invalid_argument("grid coordinates out of range");
    return (i - 1) * cols_ + (j - 1);
}

std::pair<int, int> GroundSet::grid_coords(int index) const {
    if (kind_ != GroundKind::Grid) throw std::invalid_argument("not a grid ground set");
    return {index / cols_ + 1, index % cols_ + 1};
}

int GroundSet::cube_index(const std::string& w) const {
    if (kind_ != GroundKind::Hypercube) throw std::invalid_argument("not a hypercube ground set");
    if (int(w.size()) != bits_) throw std::invalid_argument("bit string has wrong length");
    int v = 0;
    for (char c : w) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string must be 0/1");
        v = v * 2 + (c - '0');
    }
    return v;
}

std::string GroundSet::cube_string(int index) const {
    if (kind_ != GroundKind::Hypercube) throw std::invalid_argument("not a hypercube ground set");
    return labels_[index];
}

bool GroundSet::same_as(const GroundSet& o) const {
    if (this == &o) return true;
    return size_ == o.size_ && kind_ == o.kind_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           bits_ == o.bits_;
}

Subset::Subset(GroundPtr ground, Bitset bits) : ground_(std::move(ground)), bits_(std::move(bits)) {
    if (!ground_) throw std::invalid_argument("subset needs a ground set");
    if (bits_.size() != ground_->size())
        throw std::invalid_argument("bit vector length does not match ground set");
}

Subset Subset::empty(GroundPtr ground) {
    int n = ground->size();
    return Subset(std::move(ground), Bitset(n));
}

Subset Subset::full(GroundPtr ground) {
    int n = ground->size();
    return Subset(std::move(ground), Bitset::full(n));
}

std::string Subset::pretty() const {
    std::string s = "{";
    bool first = true;
    for (int i = bits_.first(); i >= 0; i = bits_.next(i)) {
        if (!first) s += ",";
        s += ground_->label(i);
        first = false;
    }
    return s + "}";
}

void require_same_ground(const Subset& a, const Subset& b) {
    if (!a.ground() || !b.ground() || !a.ground()->same_as(*b.ground()))
        throw std::invalid_argument("operands live over different ground sets");
}

Subset set_union(const Subset& a, const Subset& b) {
    require_same_ground(a, b);
    return a.with_bits(a.bits() | b.bits());
}

Subset set_intersection(const Subset& a, const Subset& b) {
    require_same_ground(a, b);
    return a.with_bits(a.bits() & b.bits());
}

Subset set_complement(const Subset& a) { return a.with_bits(~a.bits()); }

bool is_subset(const Subset& a, const Subset& b) {
    require_same_ground(a, b);
    return a.bits().subset_of(b.bits());
}

Subset relativize(const Subset& s, const Subset& u) { return set_intersection(s, u); }

DiscreteSpace::DiscreteSpace(GroundPtr ground, std::vector<Generator> gens, std::string descriptor,
                             bool allow_uncovered)
    : ground_(std::move(ground)), gens_(std::move(gens)), descriptor_(std::move(descriptor)) {
    if (!ground_) throw std::invalid_argument("space needs a ground set");
    if (gens_.empty()) throw std::invalid_argument("generator family must be non-empty");
    Bitset cover(ground_->size());
    for (const auto& g : gens_) {
        if (!g.set.ground() || !g.set.ground()->same_as(*ground_))
            throw std::invalid_argument("generator over wrong ground set");
        cover |= g.set.bits();
    }
    covers_ = cover.count() == ground_->size();
    if (!covers_ && !allow_uncovered)
        throw std::invalid_argument("generator family does not cover the ground set");
}

std::optional<int> DiscreteSpace::find_generator(const Subset& s) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].set == s) return int(i);
    return std::nullopt;
}

DiscreteSpace relativize(const DiscreteSpace& space, const Subset& u) {
    std::vector<Generator> gens;
    gens.reserve(space.generators().size());
    for (const auto& g : space.generators()) gens.push_back({g.name, relativize(g.set, u)});
    return DiscreteSpace(space.ground(), std::move(gens), space.descriptor() + "|rel",
                         /*allow_uncovered=*/true);
}

std::string format_subset(const Subset& s) { return s.to_string(); }

Subset parse_subset(const GroundPtr& ground, const std::string& text) {
    std::string compact;
    compact.reserve(text.size());
    std::vector<int> line_bits;
    int cur = 0;
    for (char c : text) {
        if (c == '0' || c == '1') {
            compact += c;
            ++cur;
        } else if (c == '\n') {
            if (cur) line_bits.push_back(cur);
            cur = 0;
        } else if (!isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("subset text must contain only 0/1 and whitespace");
        }
    }
    if (cur) line_bits.push_back(cur);
    if (int(compact.size()) != ground->size())
        throw std::invalid_argument("subset text has " + std::to_string(compact.size()) +
                                    " bits, ground set has " + std::to_string(ground->size()));
    if (line_bits.size() > 1) {
        // Matrix form: rows-many lines of cols bits each, grids only.
        if (ground->kind() != GroundKind::Grid)
            throw std::invalid_argument("matrix form only applies to grid ground sets");
        if (int(line_bits.size()) != ground->rows())
            throw std::invalid_argument("matrix form must have one line per row");
        for (int n : line_bits)
            if (n != ground->cols())
                throw std::invalid_argument("matrix form must have one column per bit");
    }
    return Subset(ground, Bitset::from_string(compact));
}

}  // namespace dcx
