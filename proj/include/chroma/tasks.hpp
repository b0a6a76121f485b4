#ifndef CHROMA_TASKS_HPP
#define CHROMA_TASKS_HPP

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chroma/subdivision.hpp"

namespace chroma {

/// Decision map: vertex of the final subdivision -> output name.
struct DecisionMap {
    std::unordered_map<Label, int, LabelHash> entries;

    bool defined(const Label& v) const { return entries.count(v) > 0; }
    int at(const Label& v) const;  // throws DecisionMapUndefined
};

/// A colored output vertex. Names repeat across colors; simplexes of the
/// output complex pair distinct colors with (task-dependent) constraints
/// such as distinct names.
struct OutputVertex {
    Color color = 0;
    int name = 0;

    bool operator==(const OutputVertex& o) const {
        return color == o.color && name == o.name;
    }
    bool operator<(const OutputVertex& o) const {
        if (color != o.color) return color < o.color;
        return name < o.name;
    }
};

using OutputSimplex = std::vector<OutputVertex>;  // sorted by color

struct OutputComplex {
    std::vector<OutputSimplex> facets;

    bool contains(OutputSimplex s) const;
    std::vector<OutputVertex> vertices() const;
};

/// A task triple (I, O, Phi) together with the decision map of its
/// protocol (I, O, delta o Ch^K).
struct Task {
    std::string id;
    Complex input;
    int n = 0;
    int K = 1;
    OutputComplex output;
    DecisionMap delta;
    /// Decode (color, name) back to a label when the output complex is
    /// itself made of labels (empty otherwise).
    std::unordered_map<Color, std::unordered_map<int, Label>> decode;
    /// Membership test for the carrier map: allowed(Carr(sigma, I), image).
    std::function<bool(const Simplex&, const OutputSimplex&)> allowed;
};

/// The 3-process renaming instance: (cls{0,1,2}, names 0..4, delta o Ch^2).
/// `tower` must be the K=2 tower over cls{0,1,2}.
Task renaming_task(const Tower& tower);

/// Decision map of the renaming instance for a vertex of Ch^2(cls{0,1,2}),
/// evaluated by the five-case analysis (4, 3, 2, 1, 0, in that order) over
/// the parent p_{2,1}(w) and the carrier Carr(w, Ch I).
/// Throws DecisionMapUndefined if no case applies (checked total in tests).
int renaming_delta(const Tower& tower, const Label& w);

/// Degenerate extreme: O = I, Phi(sigma) = cls sigma, delta = composite
/// parent to the input. Specializes to a protocol with no memory access.
Task parent_map_task(const Tower& tower);

/// Degenerate extreme: O = Ch(I), delta = identity; K must be 1. Nothing
/// can be decided early except the deterministic d=0 relabelings.
Task chromatic_agreement_task(const Tower& tower);

struct DecisionReport {
    std::size_t simplexes_checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks, for every simplex sigma of the tower's final complex, that the
/// delta-image is a simplex of O, color-preserving, and allowed by the
/// carrier map at Carr(sigma, I). Reports all violations.
DecisionReport verify_decision_map(const Task& task, const Tower& tower);

}  // namespace chroma

#endif
