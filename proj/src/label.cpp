#include "chroma/label.hpp"

#include <algorithm>
#include <sstream>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    // boost-style hash combine
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Label Label::base(Color c) {
    if (c < 0) throw MalformedLabel("negative color " + std::to_string(c));
    std::size_t h = mix(0x42, static_cast<std::size_t>(c));
    return Label(c, nullptr, h);
}

Label Label::pair(Color c, std::vector<Label> view) {
    if (view.empty()) throw MalformedLabel("pair label with empty view");
    std::sort(view.begin(), view.end());
    view.erase(std::unique(view.begin(), view.end()), view.end());
    bool has_own = false;
    for (std::size_t i = 0; i < view.size(); ++i) {
        if (i > 0 && view[i].color() == view[i - 1].color())
            throw MalformedLabel("duplicate color " + std::to_string(view[i].color()) +
                                 " in view");
        if (view[i].color() == c) has_own = true;
    }
    if (!has_own)
        throw MalformedLabel("view lacks a member of color " + std::to_string(c));
    std::size_t h = mix(0x1337, static_cast<std::size_t>(c));
    for (const Label& l : view) h = mix(h, l.hash());
    return Label(c, std::make_shared<const std::vector<Label>>(std::move(view)), h);
}

const std::vector<Label>& Label::view() const {
    if (!view_) throw MalformedLabel("base label has no view");
    return *view_;
}

int Label::compare(const Label& other) const {
    if (is_base() != other.is_base()) return is_base() ? -1 : 1;
    if (color_ != other.color_) return color_ < other.color_ ? -1 : 1;
    if (is_base()) return 0;
    if (view_ == other.view_) return 0;  // shared representation
    const auto& a = *view_;
    const auto& b = *other.view_;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = a[i].compare(b[i]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

bool Label::operator==(const Label& other) const {
    if (hash_ != other.hash_) return false;
    return compare(other) == 0;
}

std::string Label::str() const {
    if (is_base()) return std::to_string(color_);
    std::ostringstream os;
    os << '(' << color_ << ",{";
    bool first = true;
    for (const Label& l : *view_) {
        if (!first) os << ',';
        first = false;
        os << l.str();
    }
    os << "})";
    return os.str();
}

}  // namespace chroma
