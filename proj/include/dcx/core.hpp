#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dcx/bitset.hpp"

namespace dcx {

// How element indices of a ground set map back to named coordinates.
enum class GroundKind { Plain, Grid, Hypercube };

// Immutable finite ground set. Element order is fixed by the kind:
// grids are row-major 1-indexed, hypercube strings sit at their binary value
// (first character most significant).
class GroundSet {
public:
    static std::shared_ptr<const GroundSet> plain(int n);
    static std::shared_ptr<const GroundSet> grid(int rows, int cols);
    static std::shared_ptr<const GroundSet> hypercube(int nbits);

    int size() const { return size_; }
    GroundKind kind() const { return kind_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int bits() const { return bits_; }

    const std::string& label(int index) const { return labels_[index]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Grid coordinate helpers, 1-indexed.
    int grid_index(int i, int j) const;
    std::pair<int, int> grid_coords(int index) const;
    // Hypercube helpers; strings are 0/1, first character most significant.
    int cube_index(const std::string& w) const;
    std::string cube_string(int index) const;

    bool same_as(const GroundSet& o) const;

private:
    GroundSet() = default;

    int size_ = 0;
    GroundKind kind_ = GroundKind::Plain;
    int rows_ = 0, cols_ = 0, bits_ = 0;
    std::vector<std::string> labels_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

// A subset of a ground set, stored as a bit vector in canonical element order.
class Subset {
public:
    Subset() = default;
    Subset(GroundPtr ground, Bitset bits);
    static Subset empty(GroundPtr ground);
    static Subset full(GroundPtr ground);

    const GroundPtr& ground() const { return ground_; }
    const Bitset& bits() const { return bits_; }

    bool contains(int index) const { return bits_.test(index); }
    Subset& add(int index) {
        bits_.set(index);
        return *this;
    }
    int count() const { return bits_.count(); }
    bool is_empty() const { return bits_.none(); }
    bool is_full() const { return bits_.count() == bits_.size(); }
    bool is_trivial() const { return is_empty() || is_full(); }

    bool operator==(const Subset& o) const { return bits_ == o.bits_; }
    bool operator!=(const Subset& o) const { return bits_ != o.bits_; }
    bool operator<(const Subset& o) const { return bits_ < o.bits_; }

    std::string to_string() const { return bits_.to_string(); }
    // Human-oriented: "{(1,2),(2,1)}" / "{01,10}" / "{e1,e3}".
    std::string pretty() const;

    Subset with_bits(Bitset b) const { return Subset(ground_, std::move(b)); }

private:
    GroundPtr ground_;
    Bitset bits_;
};

void require_same_ground(const Subset& a, const Subset& b);

Subset set_union(const Subset& a, const Subset& b);
Subset set_intersection(const Subset& a, const Subset& b);
Subset set_complement(const Subset& a);
bool is_subset(const Subset& a, const Subset& b);

// B_U = B ∩ U.
Subset relativize(const Subset& s, const Subset& u);

struct Generator {
    std::string name;
    Subset set;
};

// A ground set together with its ordered, named generator family.
// Families whose union misses part of the ground set are representable but
// carry covers_ground = false; constructors reject them unless waived.
class DiscreteSpace {
public:
    DiscreteSpace() = default;
    DiscreteSpace(GroundPtr ground, std::vector<Generator> gens, std::string descriptor,
                  bool allow_uncovered = false);

    const GroundPtr& ground() const { return ground_; }
    const std::vector<Generator>& generators() const { return gens_; }
    int generator_count() const { return int(gens_.size()); }
    const Generator& generator(int i) const { return gens_[i]; }
    bool covers_ground() const { return covers_; }
    const std::string& descriptor() const { return descriptor_; }

    // Index of the first generator equal to `s`, or nullopt.
    std::optional<int> find_generator(const Subset& s) const;

private:
    GroundPtr ground_;
    std::vector<Generator> gens_;
    bool covers_ = true;
    std::string descriptor_;
};

// Same family intersected member-wise with U; order and names preserved.
// The result is tagged as not covering the ground set.
DiscreteSpace relativize(const DiscreteSpace& space, const Subset& u);

// Text forms. Subsets serialize as 0/1 strings in canonical element order;
// grid ground sets additionally accept a rows-many-line 0/1 matrix.
std::string format_subset(const Subset& s);
Subset parse_subset(const GroundPtr& ground, const std::string& text);

}  // namespace dcx
