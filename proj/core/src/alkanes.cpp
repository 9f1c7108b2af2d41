#include "plumbline/alkanes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

namespace plumbline {

Alkane::Alkane(int genus, std::vector<Edge> edges) : genus_(genus), edges_(std::move(edges))
{
    if (genus < 1) throw InvalidAlkane("alkane genus must be >= 1");
    if (static_cast<int>(edges_.size()) != genus - 1)
        throw InvalidAlkane("a tree on " + std::to_string(genus) + " vertices has " + std::to_string(genus - 1) +
                            " edges, got " + std::to_string(edges_.size()));
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw InvalidAlkane("duplicate edge");

    adjacency_.assign(genus, {});
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= genus) throw InvalidAlkane("edge endpoint out of range");
        if (e.u == e.v) throw InvalidAlkane("self-loop");
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) {
        if (nbrs.size() > kMaxValence) throw InvalidAlkane("vertex of degree > 4");
        std::sort(nbrs.begin(), nbrs.end());
    }

    std::vector<char> seen(genus, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != genus) throw InvalidAlkane("edge set is not connected");
}

bool Alkane::has_edge(int a, int b) const
{
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

Alkane Alkane::relabeled(const std::vector<int>& perm) const
{
    if (static_cast<int>(perm.size()) != genus_) throw InvalidAlkane("permutation has wrong length");
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (const Edge& e : edges_) mapped.emplace_back(perm.at(e.u), perm.at(e.v));
    return Alkane(genus_, std::move(mapped));
}

Alkane chain_alkane(int genus)
{
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < genus; ++v) edges.emplace_back(v, v + 1);
    return Alkane(genus, std::move(edges));
}

Alkane star_alkane(int genus)
{
    std::vector<Edge> edges;
    for (int v = 1; v < genus; ++v) edges.emplace_back(0, v);
    return Alkane(genus, std::move(edges));
}

std::string rooted_code(const Alkane& a, int root)
{
    const auto& adj = a.adjacency();
    std::function<std::string(int, int)> code = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != parent) kids.push_back(code(w, v));
        std::sort(kids.begin(), kids.end());
        std::string out = "(";
        for (const auto& k : kids) out += k;
        return out + ")";
    };
    return code(root, -1);
}

std::vector<int> centroids(const Alkane& a)
{
    const int n = a.genus();
    const auto& adj = a.adjacency();
    std::vector<int> order, parent(n, -1), size(n, 1);
    std::vector<char> seen(n, 0);
    order.reserve(n);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];

    // A centroid leaves no component with more than n/2 vertices.
    std::vector<int> result;
    for (int v = 0; v < n; ++v) {
        int largest = n - size[v];
        for (int w : adj[v])
            if (parent[w] == v) largest = std::max(largest, size[w]);
        if (2 * largest <= n) result.push_back(v);
    }
    return result;
}

CanonicalCode canonical_code(const Alkane& a)
{
    std::string best;
    for (int c : centroids(a)) {
        std::string s = rooted_code(a, c);
        if (best.empty() || s < best) best = std::move(s);
    }
    return {best};
}

namespace {

struct Branch {
    int size;
    std::string code;
};

// branches[n]: codes of rooted trees on n vertices in which every vertex has
// at most 3 children, i.e. pendant subtrees that fit under a carbon.
std::vector<std::vector<std::string>> rooted_branches(int max_size)
{
    std::vector<std::vector<std::string>> branches(max_size + 1);
    if (max_size >= 1) branches[1] = {"()"};
    for (int n = 2; n <= max_size; ++n) {
        std::vector<Branch> pool;
        for (int s = 1; s < n; ++s)
            for (const auto& c : branches[s]) pool.push_back({s, c});
        std::vector<std::string> found;
        std::vector<int> picks;
        std::function<void(std::size_t, int)> choose = [&](std::size_t from, int remaining) {
            if (remaining == 0) {
                std::vector<std::string> kids;
                for (int p : picks) kids.push_back(pool[p].code);
                std::sort(kids.begin(), kids.end());
                std::string code = "(";
                for (const auto& k : kids) code += k;
                found.push_back(code + ")");
                return;
            }
            if (picks.size() == 3) return;
            for (std::size_t k = from; k < pool.size(); ++k) {
                if (pool[k].size > remaining) continue;
                picks.push_back(static_cast<int>(k));
                choose(k, remaining - pool[k].size);
                picks.pop_back();
            }
        };
        choose(0, n - 1);
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        branches[n] = std::move(found);
    }
    return branches;
}

void build_from_code(const std::string& code, std::vector<Edge>& edges, int& next_vertex, int parent)
{
    // code is "(" children ")", children are balanced substrings.
    const int self = next_vertex++;
    if (parent >= 0) edges.emplace_back(parent, self);
    int depth = 0;
    std::size_t start = 1;
    for (std::size_t k = 1; k + 1 < code.size(); ++k) {
        if (code[k] == '(') {
            if (depth == 0) start = k;
            ++depth;
        } else if (--depth == 0) {
            build_from_code(code.substr(start, k - start + 1), edges, next_vertex, self);
        }
    }
}

// Relabels by DFS preorder from an end of a longest path, so chains come out
// as 0-1-2-...-(g-1).
Alkane standard_labeling(const Alkane& a)
{
    const int n = a.genus();
    const auto& adj = a.adjacency();
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    q.push(0);
    dist[0] = 0;
    int far = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[v] > dist[far] || (dist[v] == dist[far] && v < far)) far = v;
        for (int w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    std::vector<int> label(n, -1);
    int next = 0;
    std::vector<int> stack{far};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (label[v] >= 0) continue;
        label[v] = next++;
        for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it)
            if (label[*it] < 0) stack.push_back(*it);
    }
    return a.relabeled(label);
}

} // namespace

std::vector<Alkane> enumerate_alkanes(int genus, int cap)
{
    if (genus < 1 || genus > cap)
        throw RangeError("genus " + std::to_string(genus) + " outside [1, " + std::to_string(cap) + "]");

    std::vector<std::string> rooted;
    if (genus == 1) {
        rooted.push_back("()");
    } else {
        const int half = (genus - 1) / 2;
        const auto branches = rooted_branches(std::max(half, genus / 2));

        // Unique centroid: at most 4 subtrees, each of size <= (g-1)/2.
        std::vector<Branch> pool;
        for (int s = 1; s <= half; ++s)
            for (const auto& c : branches[s]) pool.push_back({s, c});
        std::vector<int> picks;
        std::function<void(std::size_t, int)> choose = [&](std::size_t from, int remaining) {
            if (remaining == 0) {
                std::string code = "(";
                for (int p : picks) code += pool[p].code;
                rooted.push_back(code + ")");
                return;
            }
            if (picks.size() == kMaxValence) return;
            for (std::size_t k = from; k < pool.size(); ++k) {
                if (pool[k].size > remaining) continue;
                picks.push_back(static_cast<int>(k));
                choose(k, remaining - pool[k].size);
                picks.pop_back();
            }
        };
        choose(0, genus - 1);

        // Two centroids: an edge joining two branches of size g/2.
        if (genus % 2 == 0) {
            const auto& halves = branches[genus / 2];
            for (std::size_t x = 0; x < halves.size(); ++x)
                for (std::size_t y = x; y < halves.size(); ++y) {
                    // Root at the first centroid; the second hangs as a child.
                    const std::string& left = halves[x];
                    rooted.push_back(left.substr(0, left.size() - 1) + halves[y] + ")");
                }
        }
    }

    std::vector<std::pair<CanonicalCode, Alkane>> keyed;
    keyed.reserve(rooted.size());
    for (const auto& code : rooted) {
        std::vector<Edge> edges;
        int next = 0;
        build_from_code(code, edges, next, -1);
        Alkane a = standard_labeling(Alkane(genus, std::move(edges)));
        keyed.emplace_back(canonical_code(a), std::move(a));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<Alkane> out;
    out.reserve(keyed.size());
    for (std::size_t k = 0; k < keyed.size(); ++k) {
        if (k > 0 && keyed[k].first == keyed[k - 1].first) throw FormulaViolation("duplicate alkane generated");
        out.push_back(std::move(keyed[k].second));
    }
    return out;
}

ValencyProfile valency_profile(const Alkane& a)
{
    ValencyProfile p;
    for (int v = 0; v < a.genus(); ++v) {
        int d = a.degree(v);
        if (d == 0)
            ++p.isolated;
        else
            ++p.gamma[d - 1];
    }
    return p;
}

int hydrogen_count(const Alkane& a)
{
    int h = 0;
    for (int v = 0; v < a.genus(); ++v) h += kMaxValence - a.degree(v);
    return h;
}

bool is_chain(const Alkane& a)
{
    for (int v = 0; v < a.genus(); ++v)
        if (a.degree(v) > 2) return false;
    return true;
}

} // namespace plumbline
