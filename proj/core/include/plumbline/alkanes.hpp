#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "plumbline/errors.hpp"

namespace plumbline {

inline constexpr int kDefaultGenusCap = 16;
inline constexpr int kMaxValence = 4;

/// Undirected edge, stored with u < v. Vertices are 0-based internally.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Nested-parentheses code; equal codes iff isomorphic trees.
struct CanonicalCode {
    std::string code;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Free tree on `genus` vertices with every degree at most 4: the carbon
/// skeleton of the alkane C_g H_{2g+2}.
class Alkane {
public:
    /// Throws InvalidAlkane unless the edges form a tree with max degree 4.
    Alkane(int genus, std::vector<Edge> edges);

    int genus() const { return genus_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
    int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool has_edge(int a, int b) const;

    /// Image under the vertex map v -> perm[v].
    Alkane relabeled(const std::vector<int>& perm) const;

    friend bool operator==(const Alkane& a, const Alkane& b) { return a.genus_ == b.genus_ && a.edges_ == b.edges_; }

private:
    int genus_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// (gamma_1, ..., gamma_4): number of carbons bonded to exactly j carbons.
/// The lone carbon of methane has no carbon bonds and is counted in `isolated`.
struct ValencyProfile {
    std::array<int, 4> gamma{};
    int isolated = 0;

    int operator[](int j) const { return gamma.at(j - 1); }
    friend bool operator==(const ValencyProfile&, const ValencyProfile&) = default;
};

Alkane chain_alkane(int genus);
/// Star with one centre (vertex 0) and genus-1 leaves; genus <= 5.
Alkane star_alkane(int genus);

CanonicalCode canonical_code(const Alkane& a);
/// AHU code of the tree rooted at `root`, children sorted.
std::string rooted_code(const Alkane& a, int root);
/// One or two centroid vertices.
std::vector<int> centroids(const Alkane& a);

/// One representative per isomorphism class, sorted by canonical code.
/// Chains are labelled along the path 1-2-...-g.
std::vector<Alkane> enumerate_alkanes(int genus, int cap = kDefaultGenusCap);

ValencyProfile valency_profile(const Alkane& a);
int hydrogen_count(const Alkane& a);
bool is_chain(const Alkane& a);

} // namespace plumbline
