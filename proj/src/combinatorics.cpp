#include <jvoa/combinatorics.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace jvoa {

Derangement Derangement::from_image(std::vector<int> image)
{
    const int n = static_cast<int>(image.size());
    std::vector<bool> seen(n, false);
    for (int i = 1; i <= n; ++i) {
        int v = image[i - 1];
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("not a permutation");
        if (v == i)
            throw std::invalid_argument("permutation has a fixed point");
        seen[v - 1] = true;
    }
    Derangement d;
    d.image = std::move(image);
    std::vector<bool> visited(n, false);
    for (int start = 1; start <= n; ++start) {
        if (visited[start - 1])
            continue;
        std::vector<int> cycle;
        for (int i = start; !visited[i - 1]; i = d.image[i - 1]) {
            visited[i - 1] = true;
            cycle.push_back(i);
        }
        d.cycles.push_back(std::move(cycle)); // starts at its smallest label
    }
    return d;
}

std::string Derangement::cycle_notation() const
{
    if (image.empty())
        return "()";
    std::string out;
    for (const auto& cycle : cycles) {
        out += "(";
        for (int i : cycle)
            out += std::to_string(i);
        out += ")";
    }
    return out;
}

std::vector<int> Derangement::cycle_type() const
{
    std::vector<int> type;
    for (const auto& c : cycles)
        type.push_back(static_cast<int>(c.size()));
    std::sort(type.begin(), type.end());
    return type;
}

namespace {

void derangements_rec(int n, int i, std::vector<int>& image, std::vector<bool>& used,
                      std::vector<Derangement>& out)
{
    if (i > n) {
        out.push_back(Derangement::from_image(image));
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[v - 1] || v == i)
            continue;
        // If label n is still unused at position n-1's turn it would be
        // forced to map to itself; the plain check below handles that by
        // failing at i = n, which is cheap enough at these sizes.
        used[v - 1] = true;
        image[i - 1] = v;
        derangements_rec(n, i + 1, image, used, out);
        used[v - 1] = false;
    }
}

} // namespace

std::vector<Derangement> enumerate_derangements(int n)
{
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    std::vector<Derangement> out;
    std::vector<int> image(n);
    std::vector<bool> used(n, false);
    derangements_rec(n, 1, image, used, out);
    return out;
}

std::string Endpoint::name() const
{
    return (side == Side::A ? "a" : "b") + std::to_string(pair);
}

namespace {

Endpoint endpoint_of_index(int idx)
{
    return Endpoint{idx / 2 + 1, idx % 2 == 0 ? Side::A : Side::B};
}

void diagrams_rec(int n, std::vector<int>& partner, int from, std::vector<Edge>& edges,
                  std::vector<Diagram>& out)
{
    int u = from;
    while (u < 2 * n && partner[u] >= 0)
        ++u;
    if (u == 2 * n) {
        out.push_back(Diagram{n, edges});
        return;
    }
    for (int v = u + 1; v < 2 * n; ++v) {
        if (partner[v] >= 0 || v / 2 == u / 2) // within-pair edges excluded here
            continue;
        partner[u] = v;
        partner[v] = u;
        edges.push_back({endpoint_of_index(u), endpoint_of_index(v)});
        diagrams_rec(n, partner, u + 1, edges, out);
        edges.pop_back();
        partner[u] = -1;
        partner[v] = -1;
    }
}

} // namespace

std::vector<Diagram> enumerate_diagrams(int n)
{
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    std::vector<Diagram> out;
    std::vector<int> partner(2 * n, -1);
    std::vector<Edge> edges;
    diagrams_rec(n, partner, 0, edges, out);
    return out;
}

SignAssignment induced_sign(const Diagram& D)
{
    SignAssignment s;
    s.signs.assign(D.n, {'?', '?'});
    auto set = [&](const Endpoint& e, char sign) {
        auto& entry = s.signs[e.pair - 1];
        (e.side == Side::A ? entry.first : entry.second) = sign;
    };
    for (const auto& [u, v] : D.edges) {
        // endpoint-sorted, so u lies in the smaller pair
        set(u, '+');
        set(v, '-');
    }
    return s;
}

std::vector<Diagram> diagrams_for_sign(int n, const SignAssignment& eps)
{
    if (static_cast<int>(eps.signs.size()) != n)
        throw std::invalid_argument("sign length mismatch");
    std::vector<Diagram> out;
    for (auto& D : enumerate_diagrams(n))
        if (induced_sign(D) == eps)
            out.push_back(std::move(D));
    return out;
}

Derangement diagram_to_derangement(const Diagram& D)
{
    const int n = D.n;
    if (n < 2)
        throw std::invalid_argument("diagram contraction needs n >= 2");

    // partner[pair-1][side]: the endpoint matched with (pair, side)
    std::vector<std::array<Endpoint, 2>> partner(n);
    for (const auto& [u, v] : D.edges) {
        partner[u.pair - 1][u.side == Side::A ? 0 : 1] = v;
        partner[v.pair - 1][v.side == Side::A ? 0 : 1] = u;
    }

    std::vector<int> image(n, 0);
    std::vector<bool> visited(n, false);
    for (int start = 1; start <= n; ++start) {
        if (visited[start - 1])
            continue;
        // Orientation rule: leave the smallest label through its a-endpoint.
        int cur = start;
        Side exit_side = Side::A;
        while (!visited[cur - 1]) {
            visited[cur - 1] = true;
            Endpoint next = partner[cur - 1][exit_side == Side::A ? 0 : 1];
            image[cur - 1] = next.pair;
            cur = next.pair;
            // entered through next.side; leave through the other endpoint
            exit_side = next.side == Side::A ? Side::B : Side::A;
        }
    }
    return Derangement::from_image(std::move(image));
}

std::vector<Diagram> fibre(const Derangement& sigma, int n)
{
    if (sigma.n() != n || n < 2)
        throw std::invalid_argument("fibre needs a derangement of n >= 2");
    std::vector<Diagram> out;
    for (auto& D : enumerate_diagrams(n))
        if (diagram_to_derangement(D) == sigma)
            out.push_back(std::move(D));
    return out;
}

} // namespace jvoa
