#ifndef JVOA_COMBINATORICS_HPP
#define JVOA_COMBINATORICS_HPP

#include <compare>
#include <string>
#include <vector>

namespace jvoa {

/// Fixed-point-free permutation of {1..n} with its disjoint-cycle
/// decomposition. Each cycle is rotated so its smallest label comes
/// first; cycles are sorted by smallest label.
struct Derangement {
    std::vector<int> image;              // image[i-1] = sigma(i), 1-based labels
    std::vector<std::vector<int>> cycles;

    static Derangement from_image(std::vector<int> image); // validates
    int n() const { return static_cast<int>(image.size()); }
    int cycle_count() const { return static_cast<int>(cycles.size()); }
    int apply(int i) const { return image[i - 1]; }
    std::string cycle_notation() const; // "(12)(3564)"
    /// Cycle lengths sorted ascending, e.g. {2,4}; display-order key.
    std::vector<int> cycle_type() const;
    bool operator==(const Derangement& o) const { return image == o.image; }
};

enum class Side { A, B };

/// One of the 2n matching points a_i, b_i.
struct Endpoint {
    int pair; // 1..n
    Side side;
    auto operator<=>(const Endpoint&) const = default;
    std::string name() const; // "a3", "b1"
};

using Edge = std::pair<Endpoint, Endpoint>; // stored with first < second

/// Perfect matching on the 2n endpoints with no within-pair edge.
/// Edges are stored sorted, each edge endpoint-sorted.
struct Diagram {
    int n = 0;
    std::vector<Edge> edges;
    bool operator==(const Diagram&) const = default;
};

/// Signs (eps_i, delta_i) on (a_i, b_i), each '+' or '-'.
struct SignAssignment {
    std::vector<std::pair<char, char>> signs;
    bool operator==(const SignAssignment&) const = default;
};

/// All fixed-point-free permutations of {1..n} in lexicographic image
/// order. n=0 yields the empty permutation, n=1 yields nothing.
std::vector<Derangement> enumerate_derangements(int n);

/// All diagrams over n pairs, generated by backtracking on the lowest
/// free endpoint with the within-pair exclusion applied during search.
/// Deterministic lexicographic order by sorted edge list.
std::vector<Diagram> enumerate_diagrams(int n);

/// The unique sign compatible with D: for an edge between pairs i < j
/// the endpoint in pair i gets '+' and the one in pair j gets '-'.
SignAssignment induced_sign(const Diagram& D);

/// Subset of enumerate_diagrams(n) whose induced sign equals eps.
std::vector<Diagram> diagrams_for_sign(int n, const SignAssignment& eps);

/// Contract each pair to a node, orient every resulting cycle by the
/// rule: the edge at a_{i1} (i1 the cycle's smallest label) points from
/// i1 to its partner pair. Defined for n >= 2 only; smaller inputs are
/// rejected.
Derangement diagram_to_derangement(const Diagram& D);

/// All diagrams mapping to sigma; size is 2^(n - c(sigma)).
std::vector<Diagram> fibre(const Derangement& sigma, int n);

} // namespace jvoa

#endif
