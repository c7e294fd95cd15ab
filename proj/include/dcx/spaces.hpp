#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcx/construction.hpp"
#include "dcx/core.hpp"

namespace dcx {

// Standard generator families. Size limits keep the desk-scale solvers honest:
// clique families have 2^N + 2^M members, rectangle families 2^(2N).
DiscreteSpace make_boolean_basis(int n);
DiscreteSpace make_monotone_basis(int n);
DiscreteSpace make_graph_stars(int rows, int cols);
DiscreteSpace make_clique_family(int rows, int cols);   // refuses N,M > 12
DiscreteSpace make_rectangles(int n);                   // refuses N > 4
DiscreteSpace make_tensor_stars(int n, int dim);

// CLI descriptors: stars:NxM, bool:n, mono:n, clique:NxM, rect:N, tensor:N^d.
DiscreteSpace parse_space(const std::string& descriptor);

// num(w): value of a 0/1 string with its first character most significant.
int num_of_string(const std::string& w);
// binary: [N] -> {0,1}^n, inverse of w -> num(w)+1.
std::string binary_of_int(int u, int n);

// The bijection phi between [2^n] x [2^n] and {0,1}^(2n):
// phi(u,v) = binary(u)binary(v).
std::string phi_forward(int n, int u, int v);
std::pair<int, int> phi_backward(int n, const std::string& w);

// Image of a graph under phi: G over [N]x[N] to a subset of {0,1}^(2n).
// N must be a power of two.
Subset function_from_graph(const Subset& g);
// Preimage: subset of {0,1}^(2n) back to [N]x[N].
Subset graph_from_function(const Subset& f);

// Named example sets.
Subset make_neq(int n);                      // off-diagonal of [N]x[N]
Subset make_chessboard(int rows, int cols);  // {(i,j) : i+j even}
// The shipped 9-step, 2-intersection construction of chessboard(5,5) over
// stars:5x5: ((R1∪R3∪R5) ∩ (C1∪C3∪C5)) ∪ ((R2∪R4) ∩ (C2∪C4)).
Construction chessboard_figure1_construction();
// Target set for a catalog name over a given ground set ("neq:N", "chess:NxM",
// or a raw 0/1 string / matrix file content).
Subset parse_target(const GroundPtr& ground, const std::string& spec);

// Duality target F over {0,1}^(1+k) for f over {0,1}^k:
// F(1,z) = f(z), F(0,z) = 1 - f(z).
Subset duality_target(const Subset& f);

// Element index map of phi from the [N]x[N] grid into {0,1}^(2n), N = 2^n.
std::vector<int> phi_index_map(int n);
// Preimage constructions of the bool:2n generators over stars:NxN. Every
// preimage is a union of rows or a union of columns; single-star preimages
// come back empty and resolve against the star family directly.
std::vector<std::optional<Construction>> star_preimage_constructions(int n);

}  // namespace dcx
