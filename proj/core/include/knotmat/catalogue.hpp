#pragma once

#include <knotmat/exactmoments.hpp>
#include <knotmat/trace_monomial.hpp>

#include <string>
#include <vector>

namespace knotmat {

struct CatalogueEntry {
    std::string name; // Rolfsen style, "6_2"
    std::vector<int> mean;
    bool alternating = true;
    // carried under two conflicting source listings; see the data file
    bool ambiguous_source = false;
};

struct CatalogueReport {
    std::size_t entries = 0;
    std::size_t replica_checked = 0;
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
};

// The knot -> Gaussian-mean table. Entries come from a versioned JSON data
// file; the mapping is many-to-one, so several knots can share a mean.
class Catalogue {
public:
    // Reads <data dir>/catalogue.json; the directory is the KNOTMAT_DATA
    // environment variable when set, else the baked-in default.
    static Catalogue load();
    static Catalogue from_json(const std::string& text);

    const std::vector<CatalogueEntry>& entries() const { return entries_; }

    const CatalogueEntry& entry(const std::string& name) const; // UnknownKnot
    TraceMonomial mean_for_knot(const std::string& name) const; // UnknownKnot

    // All names sharing the multiset of trace powers, in table order.
    std::vector<std::string> knots_for_mean(const std::vector<int>& powers) const;

    // Checks names, even total degrees, duplicates, and (within the pairing
    // budget) that every listed mean has a non-zero replica coefficient.
    CatalogueReport validate(const MomentOptions& opts = {}) const;

private:
    std::vector<CatalogueEntry> entries_;
};

// [n, n] for odd n, the torus row of the table; EvenParameter otherwise.
std::vector<int> torus_mean(int n);

// <data dir>/<filename> under the same resolution rule as Catalogue::load().
std::string data_file_path(const std::string& filename);

} // namespace knotmat
