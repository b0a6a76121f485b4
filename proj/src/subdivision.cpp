#include "chroma/subdivision.hpp"

#include <algorithm>
#include <set>

#include "chroma/errors.hpp"

namespace chroma {

Complex schlegel_simplex(const Simplex& sigma, int d) {
    if (sigma.dim() != d) return Complex::cls(sigma);
    const std::vector<Label>& verts = sigma.vertices();
    const std::size_t m = verts.size();
    std::vector<Simplex> facets;
    // nonempty subsets I of sigma's colors, ascending bitmask over the
    // canonical vertex order
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Label> f;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (std::size_t{1} << i))
                f.push_back(Label::pair(verts[i].color(), verts));
            else
                f.push_back(verts[i]);
        }
        facets.emplace_back(std::move(f));
    }
    return Complex(std::move(facets));
}

namespace {

// Intersection base∩current as a complex: maximal simplexes of base still
// present in current.
Complex complex_intersection(const Complex& base, const Complex& current) {
    std::vector<Simplex> kept;
    for (const Simplex& s : base.all_simplexes())
        if (current.contains(s)) kept.push_back(s);
    return Complex(std::move(kept));
}

}  // namespace

Stage schlegel_step(const Complex& base, const Complex& current, int k) {
    Complex common = complex_intersection(base, current);
    if (common != base.skeleton(k))
        throw PreconditionViolated("schlegel_step: base ∩ current != skel^" +
                                   std::to_string(k) + " base");

    // Old vertices: every vertex of base survives in `current` while any
    // simplex of positive dimension is still unsubdivided; at k = 0 the
    // vertices themselves are about to be relabeled.
    std::unordered_set<Label, LabelHash> old_verts;
    for (const Label& v : base.vertices()) old_verts.insert(v);

    Stage stage;
    stage.id = StageId{1, k};  // caller overwrites the iteration index
    stage.before = current;

    std::set<Simplex> subdivided;
    std::vector<Simplex> facets;
    for (const Simplex& f : current.facets()) {
        std::vector<Label> old_part, rest;
        for (const Label& v : f.vertices())
            (old_verts.count(v) ? old_part : rest).push_back(v);
        Simplex sigma(old_part);
        if (sigma.dim() != k) {
            facets.push_back(f);
            continue;
        }
        if (!common.contains(sigma))
            throw PreconditionViolated("schlegel_step: carrier " + sigma.str() +
                                       " of facet " + f.str() +
                                       " missing from base ∩ current");
        subdivided.insert(sigma);
        Simplex tail(rest);
        const Complex pieces = schlegel_simplex(sigma, k);
        for (const Simplex& piece : pieces.facets()) facets.push_back(tail.join(piece));
    }
    stage.after = Complex(std::move(facets));
    stage.subdivided.assign(subdivided.begin(), subdivided.end());

    // Parent map: each new vertex (i, sigma) goes to the color-i vertex of
    // sigma; every surviving vertex maps to itself.
    for (const Label& v : stage.after.vertices()) {
        if (stage.before.has_vertex(v)) {
            stage.parent_step.emplace(v, v);
            continue;
        }
        bool mapped = false;
        if (v.is_pair()) {
            Simplex view(v.view());
            if (subdivided.count(view)) {
                const Label* parent = view.vertex_of_color(v.color());
                stage.parent_step.emplace(v, *parent);
                mapped = true;
            }
        }
        if (!mapped)
            throw PreconditionViolated("schlegel_step: unexpected new vertex " +
                                       v.str());
    }
    return stage;
}

Complex chromatic_subdivision(const Complex& c) {
    if (c.is_void()) return c;
    if (!c.is_pure()) throw NotPure("chromatic_subdivision: complex is not pure");
    const int d = c.dim();
    Complex current = c;
    for (int k = d; k >= 0; --k) current = schlegel_step(c, current, k).after;
    return current;
}

Tower::Tower(Complex input, int K) : input_(std::move(input)), K_(K) {
    if (K_ < 1) throw PreconditionViolated("tower: K must be >= 1");
    if (input_.is_void() || !input_.is_pure())
        throw NotPure("tower: input complex must be pure and nonempty");
    n_ = input_.dim();
    if (n_ < 0) throw NotPure("tower: input complex has no vertices");

    vertex_sets_.emplace_back();
    for (const Label& v : input_.vertices()) vertex_sets_.back().insert(v);

    Complex base = input_;
    Complex current = input_;
    for (int k = 1; k <= K_; ++k) {
        for (int d = n_; d >= 0; --d) {
            Stage stage = schlegel_step(base, current, d);
            stage.id = StageId{k, d};
            current = stage.after;
            vertex_sets_.emplace_back();
            for (const Label& v : current.vertices()) vertex_sets_.back().insert(v);
            stages_.push_back(std::move(stage));
        }
        base = current;
    }

    // content hash over the canonical facet strings of every position
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    feed("K=" + std::to_string(K_) + ";n=" + std::to_string(n_));
    for (const Simplex& f : input_.facets()) feed(f.str());
    for (const Stage& st : stages_)
        for (const Simplex& f : st.after.facets()) feed(st.id.str() + f.str());
    hash_ = h;
}

int Tower::position(StageId id) const {
    if (id.k < 1 || id.k > K_ || id.d < 0 || id.d > n_)
        throw PreconditionViolated("tower: no stage " + id.str());
    return (id.k - 1) * (n_ + 1) + (n_ - id.d) + 1;
}

StageId Tower::stage_id_at(int pos) const {
    if (pos < 1 || pos > final_position())
        throw PreconditionViolated("tower: position out of range");
    return stages_[pos - 1].id;
}

const Complex& Tower::complex_at(int pos) const {
    if (pos == 0) return input_;
    if (pos < 0 || pos > final_position())
        throw PreconditionViolated("tower: position out of range");
    return stages_[pos - 1].after;
}

bool Tower::has_vertex(int pos, const Label& v) const {
    return vertex_sets_[static_cast<std::size_t>(pos)].count(v) > 0;
}

Label Tower::composite_parent(int from, int to, const Label& v) const {
    if (from < to) throw PreconditionViolated("composite_parent: from < to");
    if (!has_vertex(from, v))
        throw VertexNotFound("composite_parent: " + v.str() + " not at position " +
                             std::to_string(from));
    Label cur = v;
    for (int p = from; p > to; --p) cur = stages_[p - 1].parent_step.at(cur);
    return cur;
}

Simplex Tower::carrier_at(int pos, const Label& v) const {
    if (has_vertex(pos, v)) return Simplex({v});
    if (v.is_base())
        throw VertexNotFound("carrier_at: base label " + v.str() +
                             " absent at position " + std::to_string(pos));
    std::vector<Label> acc;
    for (const Label& m : v.view()) {
        const Simplex sub = carrier_at(pos, m);
        for (const Label& u : sub.vertices()) acc.push_back(u);
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return Simplex(std::move(acc));
}

}  // namespace chroma
