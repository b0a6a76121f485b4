#ifndef CHROMA_OPTIMIZER_HPP
#define CHROMA_OPTIMIZER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chroma/tasks.hpp"

namespace chroma {

/// For every tower position and every vertex v of the complex there, the
/// descendant set p^{-1}(v): the final-complex vertices whose composite
/// parent at that position is v.
class DescendantIndex {
public:
    explicit DescendantIndex(const Tower& tower);

    /// Descendants of v at `pos`. Throws VertexNotFound if v is not a
    /// vertex of the complex at `pos`.
    const std::vector<Label>& descendants(int pos, const Label& v) const;

private:
    std::vector<std::unordered_map<Label, std::vector<Label>, LabelHash>> by_pos_;
};

/// Per-process precomputation of Algorithm-style early decisions: at entry
/// to round (k,d) with current value v, Decide(u) exactly when the
/// delta-image of the descendants of v (taken at the entry position of the
/// round) is the singleton {u}; Continue otherwise. Keys cover every value
/// a process can hold at that entry, i.e. all vertices of Ch^{k-1}(input).
class SpecializationTable {
public:
    struct Entry {
        int pid = 0;
        StageId stage;
        Label value = Label::base(0);
        std::optional<int> decide;  // empty = Continue
    };

    SpecializationTable() = default;
    SpecializationTable(std::string task_id, std::uint64_t tower_hash,
                        std::vector<Entry> entries);

    const std::string& task_id() const { return task_id_; }
    std::uint64_t tower_hash() const { return tower_hash_; }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Decide(u) or Continue. Throws TableMiss when the key is absent.
    std::optional<int> lookup(int pid, StageId stage, const Label& value) const;

    bool has(int pid, StageId stage, const Label& value) const;

private:
    std::string task_id_;
    std::uint64_t tower_hash_ = 0;
    std::vector<Entry> entries_;
    std::map<std::tuple<int, int, int, Label>, std::optional<int>> index_;
};

/// Builds the specialization table for a task over its tower.
SpecializationTable specialize(const Task& task, const Tower& tower,
                               const DescendantIndex& index);

}  // namespace chroma

#endif
