#pragma once

/**
 * @file
 * Ladder graph in the four loop configurations and the edge basis of the
 * walker's Hilbert space.
 *
 * Vertices are labelled 0..2L+1: the left rail carries the even labels,
 * the right rail the odd ones, and rung j joins 2j with 2j+1. The walk
 * starts at vertex 0 and the sink is the opposite corner 2L+1.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ladderwalk {

using Vertex = std::size_t;

/// Which corners carry a loop. Vertex 0 and the sink always do.
enum class LadderConfig : int {
    cycles_only = 1, ///< loops at 0 and 2L+1
    short_loop = 2,  ///< plus a loop at 1
    long_loop = 3,   ///< plus a loop at 2L
    all_loops = 4,   ///< loops at every corner, 3-regular
};

inline constexpr bool has_short_loop(LadderConfig c) {
    return c == LadderConfig::short_loop || c == LadderConfig::all_loops;
}
inline constexpr bool has_long_loop(LadderConfig c) {
    return c == LadderConfig::long_loop || c == LadderConfig::all_loops;
}

inline LadderConfig config_from_int(int id) {
    if (id < 1 || id > 4) {
        throw std::invalid_argument("ladder configuration must be 1..4, got " +
                                    std::to_string(id));
    }
    return static_cast<LadderConfig>(id);
}

inline constexpr int to_int(LadderConfig c) { return static_cast<int>(c); }

struct LadderSpec {
    LadderConfig config = LadderConfig::cycles_only;
    std::size_t length = 1; ///< number of square faces L

    Vertex sink() const { return 2 * length + 1; }
    std::size_t vertex_count() const { return 2 * length + 2; }

    void validate() const {
        if (length == 0) {
            throw std::invalid_argument("ladder length must be at least 1");
        }
        (void)config_from_int(to_int(config));
    }
};

enum class EdgeKind { arc, loop };

struct DirectedEdge {
    Vertex tail = 0;
    Vertex head = 0;
    EdgeKind kind = EdgeKind::arc;

    bool is_loop() const { return kind == EdgeKind::loop; }
    friend auto operator<=>(const DirectedEdge &, const DirectedEdge &) = default;
};

inline DirectedEdge arc(Vertex tail, Vertex head) { return {tail, head, EdgeKind::arc}; }
inline DirectedEdge loop(Vertex v) { return {v, v, EdgeKind::loop}; }

/// Contiguous range of basis indices sharing one tail vertex.
struct VertexSlice {
    std::size_t offset = 0;
    std::size_t degree = 0;
};

/**
 * Ordered set of directed edges (arcs and loops) with a contiguous index per
 * edge. Edges are grouped by tail ascending; inside a group arcs come first
 * by ascending head, the loop (if any) last. Immutable once built.
 */
class EdgeBasis {
  public:
    EdgeBasis() = default;

    const LadderSpec &spec() const { return spec_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<DirectedEdge> &edges() const { return edges_; }
    const DirectedEdge &edge(std::size_t index) const { return edges_.at(index); }
    const std::vector<VertexSlice> &slices() const { return slices_; }
    const VertexSlice &slice(Vertex v) const { return slices_.at(v); }
    std::size_t degree(Vertex v) const { return slice(v).degree; }

    /// Index of the edge tail->head. Throws std::out_of_range if absent.
    std::size_t index_of(Vertex tail, Vertex head) const {
        if (tail < slices_.size()) {
            const auto &s = slices_[tail];
            for (std::size_t i = s.offset; i < s.offset + s.degree; ++i) {
                if (edges_[i].head == head) {
                    return i;
                }
            }
        }
        throw std::out_of_range("edge (" + std::to_string(tail) + "," +
                                std::to_string(head) + ") is not in the ladder");
    }
    std::size_t index_of(const DirectedEdge &e) const {
        const auto i = index_of(e.tail, e.head);
        if (edges_[i].kind != e.kind) {
            throw std::out_of_range("edge kind mismatch");
        }
        return i;
    }
    bool contains(Vertex tail, Vertex head) const {
        if (tail >= slices_.size()) {
            return false;
        }
        const auto &s = slices_[tail];
        return std::any_of(edges_.begin() + static_cast<std::ptrdiff_t>(s.offset),
                           edges_.begin() + static_cast<std::ptrdiff_t>(s.offset + s.degree),
                           [head](const DirectedEdge &e) { return e.head == head; });
    }

    /// Index of the reversed edge; loops map to themselves.
    std::size_t reverse_index(std::size_t index) const { return reverse_.at(index); }
    const std::vector<std::size_t> &reversal() const { return reverse_; }

    std::size_t loop_count() const {
        return static_cast<std::size_t>(
            std::count_if(edges_.begin(), edges_.end(), [](const auto &e) { return e.is_loop(); }));
    }

  private:
    friend EdgeBasis build_ladder(const LadderSpec &spec);

    LadderSpec spec_;
    std::vector<DirectedEdge> edges_;
    std::vector<std::size_t> reverse_;
    std::vector<VertexSlice> slices_;
};

/// Loop set E_l for the configuration.
inline std::vector<Vertex> loop_vertices(const LadderSpec &spec) {
    std::vector<Vertex> loops{0, spec.sink()};
    if (has_short_loop(spec.config)) {
        loops.push_back(1);
    }
    if (has_long_loop(spec.config)) {
        loops.push_back(2 * spec.length);
    }
    std::sort(loops.begin(), loops.end());
    return loops;
}

inline EdgeBasis build_ladder(const LadderSpec &spec) {
    spec.validate();
    const std::size_t n = spec.vertex_count();
    const std::size_t L = spec.length;

    std::vector<std::vector<Vertex>> heads(n);
    for (std::size_t i = 0; i <= L; ++i) { // rungs
        heads[2 * i].push_back(2 * i + 1);
        heads[2 * i + 1].push_back(2 * i);
    }
    for (std::size_t i = 0; i < L; ++i) { // rails, upward
        heads[2 * i].push_back(2 * i + 2);
        heads[2 * i + 1].push_back(2 * i + 3);
    }
    for (std::size_t i = 1; i <= L; ++i) { // rails, downward
        heads[2 * i].push_back(2 * i - 2);
        heads[2 * i + 1].push_back(2 * i - 1);
    }

    std::vector<bool> has_loop(n, false);
    for (Vertex v : loop_vertices(spec)) {
        has_loop[v] = true;
    }

    EdgeBasis basis;
    basis.spec_ = spec;
    basis.slices_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        auto &hs = heads[v];
        std::sort(hs.begin(), hs.end());
        basis.slices_[v].offset = basis.edges_.size();
        for (Vertex w : hs) {
            basis.edges_.push_back(arc(v, w));
        }
        if (has_loop[v]) {
            basis.edges_.push_back(loop(v));
        }
        basis.slices_[v].degree = basis.edges_.size() - basis.slices_[v].offset;
    }

    basis.reverse_.resize(basis.edges_.size());
    for (std::size_t i = 0; i < basis.edges_.size(); ++i) {
        const auto &e = basis.edges_[i];
        basis.reverse_[i] = e.is_loop() ? i : basis.index_of(e.head, e.tail);
    }
    return basis;
}

inline DirectedEdge reverse_edge(const EdgeBasis &basis, const DirectedEdge &e) {
    return basis.edge(basis.reverse_index(basis.index_of(e)));
}

/// Indices of the sink subspace H_{2L+1}, the part removed by the projector.
inline std::vector<std::size_t> sink_indices(const EdgeBasis &basis) {
    const auto &s = basis.slice(basis.spec().sink());
    std::vector<std::size_t> out(s.degree);
    for (std::size_t k = 0; k < s.degree; ++k) {
        out[k] = s.offset + k;
    }
    return out;
}

inline bool is_sink_index(const EdgeBasis &basis, std::size_t index) {
    const auto &s = basis.slice(basis.spec().sink());
    return index >= s.offset && index < s.offset + s.degree;
}

inline const char *to_string(EdgeKind k) { return k == EdgeKind::loop ? "loop" : "arc"; }

/// Plain-text edge list: one `tail head kind` line per edge in basis order.
inline void dump_graph(std::ostream &os, const EdgeBasis &basis) {
    for (const auto &e : basis.edges()) {
        os << e.tail << ' ' << e.head << ' ' << to_string(e.kind) << '\n';
    }
}

} // namespace ladderwalk
