#include "evodiv/genealogy.hpp"

#include <algorithm>
#include <unordered_set>

#include "evodiv/error.hpp"

namespace evodiv {

GenealogyLedger::GenealogyLedger(double unrelated_cap, double parent_step)
    : cap_(unrelated_cap), step_(parent_step) {
    EVODIV_REQUIRE(parent_step > 0.0 && parent_step <= unrelated_cap,
                   "ledger needs 0 < r <= t");
}

double GenealogyLedger::distance(std::uint64_t a, std::uint64_t b) const {
    if (a == b)
        return 0.0;
    const auto row = rows_.find(a);
    if (row == rows_.end())
        return cap_;
    const auto cell = row->second.find(b);
    return cell == row->second.end() ? cap_ : cell->second;
}

void GenealogyLedger::set_symmetric(std::uint64_t a, std::uint64_t b, double value) {
    rows_[a][b] = value;
    rows_[b][a] = value;
}

void GenealogyLedger::register_child(const Individual& child, std::span<const Individual> alive) {
    const auto& lineage = child.lineage;
    if (lineage.kind == BirthKind::Initial || lineage.kind == BirthKind::Hypermutation)
        return; // unrelated to everyone: absent pairs already read as the cap
    for (const Individual& other : alive) {
        if (other.id == child.id)
            continue;
        double base = 0.0;
        if (lineage.kind == BirthKind::Mutation) {
            base = distance(lineage.parent_a, other.id);
        } else {
            base = std::min(distance(lineage.parent_a, other.id),
                            distance(lineage.parent_b, other.id));
        }
        const double value = std::min(cap_, step_ + base);
        if (value < cap_)
            set_symmetric(child.id, other.id, value);
    }
}

void GenealogyLedger::prune(std::span<const Individual> alive) {
    std::unordered_set<std::uint64_t> keep;
    keep.reserve(alive.size());
    for (const Individual& individual : alive)
        keep.insert(individual.id);
    for (auto it = rows_.begin(); it != rows_.end();) {
        if (!keep.contains(it->first)) {
            it = rows_.erase(it);
            continue;
        }
        auto& row = it->second;
        for (auto cell = row.begin(); cell != row.end();)
            cell = keep.contains(cell->first) ? std::next(cell) : row.erase(cell);
        ++it;
    }
}

} // namespace evodiv
