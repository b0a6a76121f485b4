#ifndef CHROMA_LABEL_HPP
#define CHROMA_LABEL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace chroma {

using Color = int;

/// A chromatic vertex identity.
///
/// A label is either a base vertex of the input complex, identified by its
/// color (process id), or a pair (color, view) introduced by a subdivision
/// step, where the view is the set of labels the new vertex was built from.
/// Labels carry their whole history, so parent maps and carriers are
/// computable without side tables.
///
/// Labels are immutable values with a total canonical order: base labels
/// sort before pair labels, then by color, then lexicographically on the
/// sorted view. Views are stored sorted and shared.
class Label {
public:
    /// Base vertex of color `c`.
    static Label base(Color c);

    /// Subdivision vertex (c, view). The view must be nonempty, have
    /// pairwise-distinct colors, and contain a member of color `c`.
    /// Throws MalformedLabel otherwise.
    static Label pair(Color c, std::vector<Label> view);

    Color color() const { return color_; }
    bool is_base() const { return view_ == nullptr; }
    bool is_pair() const { return view_ != nullptr; }

    /// Sorted view members. Only valid for pair labels.
    const std::vector<Label>& view() const;

    std::size_t hash() const { return hash_; }

    /// Canonical three-way comparison (base < pair, then color, then view).
    int compare(const Label& other) const;

    bool operator==(const Label& other) const;
    bool operator!=(const Label& other) const { return !(*this == other); }
    bool operator<(const Label& other) const { return compare(other) < 0; }

    /// Compact textual form, e.g. "2" or "(2,{1,2})".
    std::string str() const;

private:
    Label(Color c, std::shared_ptr<const std::vector<Label>> view, std::size_t h)
        : color_(c), view_(std::move(view)), hash_(h) {}

    Color color_ = 0;
    std::shared_ptr<const std::vector<Label>> view_;  // null for base labels
    std::size_t hash_ = 0;
};

struct LabelHash {
    std::size_t operator()(const Label& l) const { return l.hash(); }
};

}  // namespace chroma

#endif
