#include "chroma/tasks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chroma/errors.hpp"

namespace chroma {

int DecisionMap::at(const Label& v) const {
    auto it = entries.find(v);
    if (it == entries.end())
        throw DecisionMapUndefined("decision map undefined at " + v.str());
    return it->second;
}

bool OutputComplex::contains(OutputSimplex s) const {
    std::sort(s.begin(), s.end());
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].color == s[i - 1].color) return false;
    auto subset = [](const OutputSimplex& a, const OutputSimplex& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    if (s.empty()) return !facets.empty();
    for (const OutputSimplex& f : facets)
        if (subset(s, f)) return true;
    return false;
}

std::vector<OutputVertex> OutputComplex::vertices() const {
    std::set<OutputVertex> vs;
    for (const OutputSimplex& f : facets) vs.insert(f.begin(), f.end());
    return {vs.begin(), vs.end()};
}

namespace {

// (i, {i,j}) for base colors i != j; reports i and the other color j.
bool is_base_edge_vertex(const Label& v, Color& i, Color& j) {
    if (!v.is_pair() || v.view().size() != 2) return false;
    for (const Label& m : v.view())
        if (!m.is_base()) return false;
    i = v.color();
    j = v.view()[0].color() == i ? v.view()[1].color() : v.view()[0].color();
    return true;
}

Label central_vertex(Color c, int n) {
    std::vector<Label> bases;
    for (Color i = 0; i <= n; ++i) bases.push_back(Label::base(i));
    return Label::pair(c, std::move(bases));
}

}  // namespace

int renaming_delta(const Tower& tower, const Label& w) {
    if (tower.n() != 2 || tower.iterations() != 2)
        throw PreconditionViolated("renaming_delta: needs the K=2 tower over cls{0,1,2}");
    const int ch_pos = tower.iteration_base_position(2);  // Ch I
    const Label p21 = tower.composite_parent(tower.final_position(), ch_pos, w);
    const Simplex carr = tower.carrier_at(ch_pos, w);
    const Label c1 = central_vertex(1, 2);
    const Label c2 = central_vertex(2, 2);
    const bool carr_central = carr.has_vertex(c1) && carr.has_vertex(c2);

    if (p21 == central_vertex(0, 2)) return 4;
    if (!carr_central && (p21 == c1 || p21 == c2)) return 3;
    Color i = 0, j = 0;
    const bool edge = is_base_edge_vertex(p21, i, j);
    if ((w.color() == 1 && carr_central) || (edge && i < j)) return 2;
    if ((w.color() == 2 && carr_central) || (edge && i > j)) return 1;
    if (p21.is_pair() && p21.view().size() == 1 && p21.view()[0].is_base()) return 0;
    throw DecisionMapUndefined("renaming_delta: no case applies to " + w.str() +
                               " (parent " + p21.str() + ")");
}

Task renaming_task(const Tower& tower) {
    Task t;
    t.id = "renaming";
    t.input = tower.input();
    t.n = 2;
    t.K = 2;
    if (tower.input() != Complex::cls(Simplex::of_bases({0, 1, 2})))
        throw PreconditionViolated("renaming_task: input must be cls{0,1,2}");

    for (const Label& w : tower.final_complex().vertices())
        t.delta.entries.emplace(w, renaming_delta(tower, w));

    // O: 15 vertices, one per (color, name); facets pair distinct names.
    std::vector<OutputSimplex> facets;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c) {
                if (a == b || a == c || b == c) continue;
                facets.push_back({{0, a}, {1, b}, {2, c}});
            }
    t.output.facets = std::move(facets);

    // Phi: names 0..4, colors within the carrier's colors, and solo inputs
    // pinned to name 0 (the solo execution decides 0).
    t.allowed = [](const Simplex& carrier, const OutputSimplex& image) {
        std::set<Color> cs;
        for (const Label& v : carrier.vertices()) cs.insert(v.color());
        for (const OutputVertex& o : image)
            if (!cs.count(o.color)) return false;
        if (carrier.size() == 1)
            for (const OutputVertex& o : image)
                if (o.name != 0) return false;
        return true;
    };
    return t;
}

Task parent_map_task(const Tower& tower) {
    Task t;
    t.id = "parent-map";
    t.input = tower.input();
    t.n = tower.n();
    t.K = tower.iterations();

    // name = rank of the label within its color class of V(I)
    std::map<Color, std::vector<Label>> classes;
    for (const Label& v : tower.input().vertices()) classes[v.color()].push_back(v);
    auto name_of = [&classes](const Label& v) {
        const auto& cls = classes.at(v.color());
        return static_cast<int>(std::find(cls.begin(), cls.end(), v) - cls.begin());
    };
    for (const auto& [c, labels] : classes)
        for (std::size_t r = 0; r < labels.size(); ++r)
            t.decode[c].emplace(static_cast<int>(r), labels[r]);

    for (const Label& w : tower.final_complex().vertices()) {
        Label p = tower.composite_parent(tower.final_position(), 0, w);
        t.delta.entries.emplace(w, name_of(p));
    }

    std::vector<OutputSimplex> facets;
    for (const Simplex& f : tower.input().facets()) {
        OutputSimplex of;
        for (const Label& v : f.vertices()) of.push_back({v.color(), name_of(v)});
        std::sort(of.begin(), of.end());
        facets.push_back(std::move(of));
    }
    t.output.facets = std::move(facets);

    // Phi(sigma) = cls sigma: decoded image must be a face of the carrier.
    auto decode = t.decode;
    t.allowed = [decode](const Simplex& carrier, const OutputSimplex& image) {
        for (const OutputVertex& o : image) {
            auto c = decode.find(o.color);
            if (c == decode.end()) return false;
            auto l = c->second.find(o.name);
            if (l == c->second.end()) return false;
            if (!carrier.has_vertex(l->second)) return false;
        }
        return true;
    };
    return t;
}

Task chromatic_agreement_task(const Tower& tower) {
    if (tower.iterations() != 1)
        throw PreconditionViolated("chromatic_agreement_task: K must be 1");
    Task t;
    t.id = "chromatic-agreement";
    t.input = tower.input();
    t.n = tower.n();
    t.K = 1;

    const Complex& ch = tower.final_complex();
    std::map<Color, std::vector<Label>> classes;
    for (const Label& v : ch.vertices()) classes[v.color()].push_back(v);
    auto name_of = [&classes](const Label& v) {
        const auto& cls = classes.at(v.color());
        return static_cast<int>(std::find(cls.begin(), cls.end(), v) - cls.begin());
    };
    for (const auto& [c, labels] : classes)
        for (std::size_t r = 0; r < labels.size(); ++r)
            t.decode[c].emplace(static_cast<int>(r), labels[r]);

    for (const Label& w : ch.vertices()) t.delta.entries.emplace(w, name_of(w));

    std::vector<OutputSimplex> facets;
    for (const Simplex& f : ch.facets()) {
        OutputSimplex of;
        for (const Label& v : f.vertices()) of.push_back({v.color(), name_of(v)});
        std::sort(of.begin(), of.end());
        facets.push_back(std::move(of));
    }
    t.output.facets = std::move(facets);

    // Phi(sigma) = Ch(cls sigma), tested with the combinatorial oracle.
    auto decode = t.decode;
    t.allowed = [decode](const Simplex& carrier, const OutputSimplex& image) {
        std::vector<Label> labels;
        for (const OutputVertex& o : image) {
            auto c = decode.find(o.color);
            if (c == decode.end()) return false;
            auto l = c->second.find(o.name);
            if (l == c->second.end()) return false;
            if (!carrier_in_base(l->second).subset_of(carrier)) return false;
            labels.push_back(l->second);
        }
        return is_ch_simplex(carrier, labels);
    };
    return t;
}

DecisionReport verify_decision_map(const Task& task, const Tower& tower) {
    DecisionReport report;
    for (const Simplex& sigma : tower.final_complex().all_simplexes()) {
        ++report.simplexes_checked;
        OutputSimplex image;
        bool defined = true;
        for (const Label& v : sigma.vertices()) {
            if (!task.delta.defined(v)) {
                report.violations.push_back("delta undefined at " + v.str());
                defined = false;
                continue;
            }
            image.push_back({v.color(), task.delta.entries.at(v)});
        }
        if (!defined) continue;
        std::sort(image.begin(), image.end());
        if (!task.output.contains(image)) {
            report.violations.push_back("delta image of " + sigma.str() +
                                        " is not a simplex of O");
            continue;
        }
        std::vector<Label> acc;
        for (const Label& v : sigma.vertices()) {
            const Simplex part = tower.carrier_at(tower.input_position(), v);
            for (const Label& u : part.vertices()) acc.push_back(u);
        }
        Simplex carrier(std::move(acc));
        if (!task.allowed(carrier, image))
            report.violations.push_back("delta image of " + sigma.str() +
                                        " not allowed by Phi at carrier " +
                                        carrier.str());
    }
    return report;
}

}  // namespace chroma
