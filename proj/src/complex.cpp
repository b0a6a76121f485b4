#include "chroma/complex.hpp"

#include <algorithm>
#include <set>

#include "chroma/errors.hpp"

namespace chroma {

Complex::Complex(std::vector<Simplex> facets) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // keep maximal simplexes only
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < facets.size() && maximal; ++j)
            if (i != j && facets[i].subset_of(facets[j]) && facets[i] != facets[j])
                maximal = false;
        if (maximal) facets_.push_back(facets[i]);
    }
    for (std::size_t i = 0; i < facets_.size(); ++i)
        for (const Label& v : facets_[i].vertices()) by_vertex_[v].push_back(i);
}

Complex Complex::cls(Simplex s) { return Complex({std::move(s)}); }

int Complex::dim() const {
    int d = -2;
    for (const Simplex& f : facets_) d = std::max(d, f.dim());
    return d;
}

bool Complex::is_pure() const {
    for (const Simplex& f : facets_)
        if (f.dim() != facets_.front().dim()) return false;
    return true;
}

bool Complex::contains(const Simplex& s) const {
    if (s.empty()) return !facets_.empty();
    auto it = by_vertex_.find(s.vertices().front());
    if (it == by_vertex_.end()) return false;
    for (std::size_t i : it->second)
        if (s.subset_of(facets_[i])) return true;
    return false;
}

bool Complex::has_vertex(const Label& v) const { return by_vertex_.count(v) > 0; }

std::vector<Label> Complex::vertices() const {
    std::vector<Label> out;
    out.reserve(by_vertex_.size());
    for (const auto& [v, idx] : by_vertex_) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> Complex::all_simplexes() const {
    std::set<Simplex> seen;
    for (const Simplex& f : facets_)
        for (Simplex& face : f.faces()) seen.insert(std::move(face));
    return {seen.begin(), seen.end()};
}

Complex Complex::star(const Label& v) const {
    auto it = by_vertex_.find(v);
    if (it == by_vertex_.end()) throw VertexNotFound("star: no vertex " + v.str());
    std::vector<Simplex> fs;
    for (std::size_t i : it->second) fs.push_back(facets_[i]);
    return Complex(std::move(fs));
}

Complex Complex::skeleton(int k) const {
    if (k < -1) throw PreconditionViolated("skeleton: k < -1");
    if (facets_.empty()) return Complex();
    if (k == -1) return Complex::cls(Simplex());
    std::vector<Simplex> fs;
    for (const Simplex& f : facets_) {
        if (f.dim() <= k) {
            fs.push_back(f);
            continue;
        }
        // all k-faces of f
        for (const Simplex& face : f.faces())
            if (face.dim() == k) fs.push_back(face);
    }
    return Complex(std::move(fs));
}

Complex Complex::join(const Complex& other) const {
    std::set<Color> mine;
    for (const auto& [v, idx] : by_vertex_) mine.insert(v.color());
    for (const auto& [v, idx] : other.by_vertex_)
        if (mine.count(v.color()))
            throw ColorClash("join: color " + std::to_string(v.color()) +
                             " on both sides");
    std::vector<Simplex> fs;
    for (const Simplex& a : facets_)
        for (const Simplex& b : other.facets_) fs.push_back(a.join(b));
    return Complex(std::move(fs));
}

Simplex carrier_in_base(const Label& v) {
    if (v.is_base()) return Simplex({v});
    std::vector<Label> acc;
    for (const Label& m : v.view()) {
        const Simplex sub = carrier_in_base(m);
        for (const Label& b : sub.vertices()) acc.push_back(b);
    }
    return Simplex(std::move(acc));
}

bool is_ch_simplex(const Simplex& sigma, const std::vector<Label>& members_in) {
    std::vector<Label> members = members_in;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<std::vector<Label>> views;
    std::set<Color> colors;
    for (const Label& m : members) {
        if (!m.is_pair())
            throw MalformedLabel("ch oracle: member " + m.str() + " is not a pair");
        for (const Label& u : m.view())
            if (!sigma.has_vertex(u))
                throw MalformedLabel("ch oracle: view member " + u.str() +
                                     " outside base simplex " + sigma.str());
        if (!colors.insert(m.color()).second) return false;  // color repeated
        views.push_back(m.view());
    }
    auto includes = [](const std::vector<Label>& a, const std::vector<Label>& b) {
        return std::includes(a.begin(), a.end(), b.begin(), b.end());
    };
    for (std::size_t j = 0; j < members.size(); ++j) {
        for (std::size_t k = 0; k < members.size(); ++k) {
            if (j == k) continue;
            // linear order by inclusion
            if (!includes(views[j], views[k]) && !includes(views[k], views[j]))
                return false;
            // immediacy: i_j in color(tau_k) implies tau_j subset of tau_k
            bool color_in_k = false;
            for (const Label& u : views[k])
                if (u.color() == members[j].color()) color_in_k = true;
            if (color_in_k && !includes(views[k], views[j])) return false;
        }
    }
    return true;
}

}  // namespace chroma
