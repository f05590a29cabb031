#include <knotmat/catalogue.hpp>

#include <knotmat/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef KNOTMAT_DATA_DIR
#define KNOTMAT_DATA_DIR "data"
#endif

namespace knotmat {

std::string data_file_path(const std::string& filename) {
    const char* env = std::getenv("KNOTMAT_DATA");
    const std::string dir = env && *env ? env : KNOTMAT_DATA_DIR;
    return dir + "/" + filename;
}

Catalogue Catalogue::load() {
    const std::string path = data_file_path("catalogue.json");
    std::ifstream in(path);
    if (!in) throw Error("cannot open catalogue data file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

Catalogue Catalogue::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad catalogue JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("entries"))
        throw Error("catalogue JSON needs an entries list");
    Catalogue c;
    try {
        for (const auto& e : j.at("entries")) {
            CatalogueEntry entry;
            entry.name = e.at("name").get<std::string>();
            entry.mean = e.at("mean").get<std::vector<int>>();
            entry.alternating = e.value("alternating", true);
            entry.ambiguous_source = e.value("ambiguous_source", false);
            c.entries_.push_back(std::move(entry));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad catalogue JSON: ") + e.what());
    }
    return c;
}

const CatalogueEntry& Catalogue::entry(const std::string& name) const {
    for (const CatalogueEntry& e : entries_)
        if (e.name == name) return e;
    throw UnknownKnot("no catalogue entry for " + name);
}

TraceMonomial Catalogue::mean_for_knot(const std::string& name) const {
    return TraceMonomial::from_powers(entry(name).mean);
}

namespace {

std::vector<int> descending(std::vector<int> powers) {
    std::sort(powers.rbegin(), powers.rend());
    return powers;
}

bool rolfsen_name(const std::string& name) {
    const auto us = name.find('_');
    if (us == std::string::npos || us == 0 || us + 1 == name.size()) return false;
    const auto digits = [](const std::string& s, std::size_t from, std::size_t to) {
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    return digits(name, 0, us) && digits(name, us + 1, name.size());
}

} // namespace

std::vector<std::string> Catalogue::knots_for_mean(const std::vector<int>& powers) const {
    const std::vector<int> key = descending(powers);
    std::vector<std::string> out;
    for (const CatalogueEntry& e : entries_)
        if (descending(e.mean) == key) out.push_back(e.name);
    return out;
}

CatalogueReport Catalogue::validate(const MomentOptions& opts) const {
    CatalogueReport report;
    report.entries = entries_.size();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const CatalogueEntry& e = entries_[i];
        if (!rolfsen_name(e.name)) report.problems.push_back(e.name + ": malformed name");
        for (std::size_t k = i + 1; k < entries_.size(); ++k)
            if (entries_[k].name == e.name)
                report.problems.push_back(e.name + ": duplicate entry");
        int total = 0;
        bool positive = !e.mean.empty();
        for (int p : e.mean) {
            total += p;
            positive = positive && p >= 1;
        }
        if (!positive) {
            report.problems.push_back(e.name + ": empty or non-positive trace power");
            continue;
        }
        if (total % 2 != 0) {
            report.problems.push_back(e.name + ": odd total degree " + std::to_string(total));
            continue;
        }
        try {
            if (replica_coefficient(TraceMonomial::from_powers(e.mean), opts) == 0)
                report.problems.push_back(e.name + ": replica coefficient vanishes");
            ++report.replica_checked;
        } catch (const CapExceeded&) {
            // too large for the configured budget; skipped, not failed
        }
    }
    return report;
}

std::vector<int> torus_mean(int n) {
    if (n < 1 || n % 2 == 0)
        throw EvenParameter("torus rows need odd n, got " + std::to_string(n));
    return {n, n};
}

} // namespace knotmat
