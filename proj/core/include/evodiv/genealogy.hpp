#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>

#include "evodiv/individual.hpp"

namespace evodiv {

/// Pairwise genealogical distances between living individuals.
///
/// A child bred from x1 and x2 sits at min(t, r + min{G(x1, y), G(x2, y)})
/// from every other individual y; a mutation child at min(t, r + G(parent, y)).
/// Completely unrelated pairs (hypermutants, initial individuals) read as the
/// cap t. Only values below the cap are stored, both directions, so memory
/// stays O(|P|^2) once dead rows are pruned.
class GenealogyLedger {
  public:
    GenealogyLedger() = default;
    GenealogyLedger(double unrelated_cap, double parent_step);

    double unrelated_cap() const { return cap_; }
    double parent_step() const { return step_; }

    /// G(a, b): 0 on the diagonal, the stored value, or the cap.
    double distance(std::uint64_t a, std::uint64_t b) const;

    /// Derives the child's row from its lineage against every individual in
    /// `alive`. Call in creation order so earlier siblings are visible.
    void register_child(const Individual& child, std::span<const Individual> alive);

    /// Drops rows and columns of individuals not present in `alive`.
    void prune(std::span<const Individual> alive);

    std::size_t stored_rows() const { return rows_.size(); }

  private:
    void set_symmetric(std::uint64_t a, std::uint64_t b, double value);

    double cap_ = 16.0;
    double step_ = 1.0;
    std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, double>> rows_;
};

} // namespace evodiv
