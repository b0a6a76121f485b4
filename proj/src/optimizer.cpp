#include "chroma/optimizer.hpp"

#include <algorithm>
#include <set>

#include "chroma/errors.hpp"

namespace chroma {

DescendantIndex::DescendantIndex(const Tower& tower) {
    by_pos_.resize(static_cast<std::size_t>(tower.final_position()) + 1);
    // Seed every position with its own vertex set so childless vertices
    // still get (possibly empty) entries, then push each final vertex down
    // through the parent steps.
    for (int pos = 0; pos <= tower.final_position(); ++pos)
        for (const Label& v : tower.complex_at(pos).vertices())
            by_pos_[static_cast<std::size_t>(pos)][v];
    for (const Label& u : tower.final_complex().vertices()) {
        Label cur = u;
        by_pos_.back()[cur].push_back(u);
        for (int pos = tower.final_position(); pos > 0; --pos) {
            cur = tower.stages()[static_cast<std::size_t>(pos - 1)].parent_step.at(cur);
            by_pos_[static_cast<std::size_t>(pos - 1)][cur].push_back(u);
        }
    }
    for (auto& m : by_pos_)
        for (auto& [v, ds] : m) std::sort(ds.begin(), ds.end());
}

const std::vector<Label>& DescendantIndex::descendants(int pos, const Label& v) const {
    const auto& m = by_pos_.at(static_cast<std::size_t>(pos));
    auto it = m.find(v);
    if (it == m.end())
        throw VertexNotFound("descendants: " + v.str() + " not at position " +
                             std::to_string(pos));
    return it->second;
}

SpecializationTable::SpecializationTable(std::string task_id, std::uint64_t tower_hash,
                                         std::vector<Entry> entries)
    : task_id_(std::move(task_id)), tower_hash_(tower_hash), entries_(std::move(entries)) {
    for (const Entry& e : entries_)
        index_[{e.pid, e.stage.k, e.stage.d, e.value}] = e.decide;
}

std::optional<int> SpecializationTable::lookup(int pid, StageId stage,
                                               const Label& value) const {
    auto it = index_.find({pid, stage.k, stage.d, value});
    if (it == index_.end())
        throw TableMiss("no table entry for pid " + std::to_string(pid) + " at " +
                        stage.str() + " with value " + value.str() +
                        " (stale table?)");
    return it->second;
}

bool SpecializationTable::has(int pid, StageId stage, const Label& value) const {
    return index_.count({pid, stage.k, stage.d, value}) > 0;
}

SpecializationTable specialize(const Task& task, const Tower& tower,
                               const DescendantIndex& index) {
    std::vector<SpecializationTable::Entry> entries;
    const int n = tower.n();
    for (int k = 1; k <= tower.iterations(); ++k) {
        // The value held at any round of iteration k is a vertex of the
        // iteration base Ch^{k-1}(input).
        const Complex& base = tower.complex_at(tower.iteration_base_position(k));
        for (int d = n; d >= 0; --d) {
            const StageId stage{k, d};
            const int entry_pos = tower.entry_position(stage);
            for (const Label& v : base.vertices()) {
                std::set<int> image;
                for (const Label& u : index.descendants(entry_pos, v))
                    image.insert(task.delta.at(u));
                SpecializationTable::Entry e;
                e.pid = v.color();
                e.stage = stage;
                e.value = v;
                if (image.size() == 1) e.decide = *image.begin();
                entries.push_back(std::move(e));
            }
        }
    }
    return SpecializationTable(task.id, tower.hash(), std::move(entries));
}

}  // namespace chroma
