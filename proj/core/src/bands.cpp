#include <knotmat/bands.hpp>

#include <knotmat/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>
#include <utility>

namespace knotmat {

namespace {

std::vector<int> default_floors(unsigned strands) {
    if (strands == 2) return {2, 1};
    std::vector<int> base(strands);
    for (unsigned i = 1; i <= strands; ++i)
        base[i - 1] = 1 + static_cast<int>(std::min(i - 1, strands - i));
    return base;
}

// Per strand, the incident rung indices ordered by height.
std::vector<std::vector<std::size_t>> incidence(const LadderDiagram& d) {
    std::vector<std::vector<std::size_t>> at(d.strands());
    for (std::size_t k = 0; k < d.rungs().size(); ++k) {
        const Rung& r = d.rungs()[k];
        at[r.pair - 1].push_back(k);
        at[r.pair].push_back(k);
    }
    return at;
}

// Follows the closed loop through the top of `start`. Every event hands the
// walker to the other side of a rung; the floor steps up when crossing over
// toward the right or under toward the left, and down otherwise. Returns
// the number of events.
template <class SignAt, class OnFloor>
std::size_t walk_loop(const LadderDiagram& d, const std::vector<std::vector<std::size_t>>& at,
                      unsigned start, int floor, SignAt sign_at, OnFloor on_floor) {
    const auto& rungs = d.rungs();
    std::size_t events = 0;
    unsigned strand = start;
    long long cursor = -1;
    while (true) {
        const auto& inc = at[strand];
        auto it = std::upper_bound(inc.begin(), inc.end(), cursor,
                                   [&](long long h, std::size_t k) {
                                       return h < static_cast<long long>(rungs[k].height);
                                   });
        if (it == inc.end()) {
            if (strand == start) return events;
            cursor = -1;
            continue;
        }
        const Rung& r = rungs[*it];
        const unsigned other = (strand == r.pair - 1) ? r.pair : r.pair - 1;
        const bool rightward = other > strand;
        const bool over = sign_at(*it) == RungSign::Over;
        floor += (over == rightward) ? 1 : -1;
        on_floor(floor);
        cursor = r.height;
        strand = other;
        if (++events > 2 * rungs.size())
            throw Error("ladder traversal failed to close");
    }
}

unsigned count_components(const LadderDiagram& d) {
    std::vector<unsigned> tok(d.strands());
    std::iota(tok.begin(), tok.end(), 0u);
    for (const Rung& r : d.rungs()) std::swap(tok[r.pair - 1], tok[r.pair]);
    unsigned cycles = 0;
    std::vector<char> seen(d.strands(), 0);
    for (unsigned i = 0; i < d.strands(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (unsigned j = i; !seen[j]; j = tok[j]) seen[j] = 1;
    }
    return cycles;
}

} // namespace

LadderDiagram::LadderDiagram(unsigned strands, std::vector<Rung> rungs,
                             std::vector<int> base_floors)
    : strands_(strands), rungs_(std::move(rungs)), base_(std::move(base_floors)) {
    if (strands_ < 2) throw MalformedDiagram("a ladder needs at least 2 strands");
    for (const Rung& r : rungs_)
        if (r.pair < 1 || r.pair >= strands_)
            throw MalformedDiagram("rung pair " + std::to_string(r.pair) + " out of range");
    std::stable_sort(rungs_.begin(), rungs_.end(),
                     [](const Rung& a, const Rung& b) { return a.height < b.height; });
    for (std::size_t i = 0; i + 1 < rungs_.size(); ++i)
        for (std::size_t j = i + 1; j < rungs_.size() && rungs_[j].height == rungs_[i].height;
             ++j) {
            unsigned pi = rungs_[i].pair, pj = rungs_[j].pair;
            if (pi == pj || pi + 1 == pj || pj + 1 == pi)
                throw MalformedDiagram("rungs sharing a strand need distinct heights");
        }
    if (base_.empty())
        base_ = default_floors(strands_);
    else if (base_.size() != strands_)
        throw MalformedDiagram("base floor list does not match the strand count");
}

LadderDiagram LadderDiagram::with_signs(const std::vector<RungSign>& signs) const {
    if (signs.size() != rungs_.size())
        throw MalformedDiagram("sign list does not match the rung count");
    LadderDiagram out = *this;
    for (std::size_t i = 0; i < signs.size(); ++i) out.rungs_[i].sign = signs[i];
    return out;
}

LadderDiagram ladder_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDiagram(std::string("bad ladder JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("strands") || !j.contains("rungs"))
        throw MalformedDiagram("ladder JSON needs strands and rungs");
    try {
        std::vector<Rung> rungs;
        for (const auto& e : j.at("rungs")) {
            Rung r;
            const auto& pair = e.at("pair");
            if (!pair.is_array() || pair.size() != 2 ||
                pair.at(1).get<long long>() != pair.at(0).get<long long>() + 1)
                throw MalformedDiagram("rung pair must name adjacent strands [i, i+1]");
            r.pair = pair.at(0).get<unsigned>();
            r.height = e.at("height").get<unsigned>();
            const std::string sign = e.at("sign").get<std::string>();
            if (sign == "over")
                r.sign = RungSign::Over;
            else if (sign == "under")
                r.sign = RungSign::Under;
            else
                throw MalformedDiagram("rung sign must be \"over\" or \"under\"");
            rungs.push_back(r);
        }
        std::vector<int> base;
        if (j.contains("base_floors")) base = j.at("base_floors").get<std::vector<int>>();
        return {j.at("strands").get<unsigned>(), std::move(rungs), std::move(base)};
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDiagram(std::string("bad ladder JSON: ") + e.what());
    }
}

NumberingSequence::NumberingSequence(std::vector<int> closed_floors, unsigned strands)
    : floors_(std::move(closed_floors)), strands_(strands) {
    if (floors_.size() < 3 || floors_.size() % 2 == 0)
        throw MalformedDiagram("a closed floor sequence has odd length 2r+1");
    if (floors_.front() != floors_.back())
        throw MalformedDiagram("floor sequence does not close up");
}

std::string NumberingSequence::string() const {
    std::string out;
    for (std::size_t i = 0; i + 1 < floors_.size(); ++i) out += std::to_string(floors_[i]);
    return out;
}

std::string NumberingSequence::closed_string() const {
    return string() + std::to_string(floors_.back());
}

long long CrossingMatrix::first_sum() const {
    return std::accumulate(first.begin(), first.end(), 0ll);
}

long long CrossingMatrix::second_sum() const {
    return std::accumulate(second.begin(), second.end(), 0ll);
}

NumberingSequence floor_numbering(const LadderDiagram& d, bool strict) {
    if (count_components(d) != 1)
        throw MultiComponent("floor numbering needs a single closed loop, got " +
                             std::to_string(count_components(d)));
    const auto at = incidence(d);
    std::vector<int> floors{d.base_floors()[0]};
    walk_loop(
        d, at, 0, floors[0], [&](std::size_t k) { return d.rungs()[k].sign; },
        [&](int f) {
            if (strict && f < 0) throw NegativeFloor("floor dropped to " + std::to_string(f));
            floors.push_back(f);
        });
    if (floors.back() != floors.front())
        throw ConservationViolated("traversal returned with a shifted floor");
    return {std::move(floors), d.strands()};
}

CrossingMatrix crossing_matrix(const NumberingSequence& seq) {
    const unsigned r = seq.rung_count();
    const auto& s = seq.floors();
    CrossingMatrix m;
    m.first.assign(s.begin(), s.begin() + r + 1);
    m.second.assign(s.begin() + r, s.end());
    if (seq.strands() == 2) {
        const int total = m.first[0] + m.second[0];
        for (unsigned k = 0; k <= r; ++k)
            if (m.first[k] + m.second[k] != total)
                throw ConservationViolated("column sum " + std::to_string(k) + " deviates");
    }
    m.verdict = m.first_sum() == m.second_sum() && r >= 3 ? Verdict::KnotCandidate
                                                          : Verdict::UnknotReducible;
    return m;
}

unsigned component_count(const LadderDiagram& d) { return count_components(d); }

std::vector<RungSign> alternating_assignment(const LadderDiagram& d) {
    std::vector<RungSign> signs;
    signs.reserve(d.rungs().size());
    for (const Rung& r : d.rungs())
        signs.push_back(d.base_floors()[r.pair] > d.base_floors()[r.pair - 1] ? RungSign::Over
                                                                              : RungSign::Under);
    return signs;
}

CensusSummary enumerate_assignments(const LadderDiagram& d, const CensusOptions& opts) {
    const std::size_t r = d.rungs().size();
    if (r > opts.rung_cap)
        throw CapExceeded("census over " + std::to_string(r) + " rungs exceeds the cap of " +
                          std::to_string(opts.rung_cap));

    const unsigned components = count_components(d);
    const auto at = incidence(d);
    const std::uint64_t total = std::uint64_t(1) << r;

    // Component id of the loop through each strand, from the closure cycles.
    std::vector<unsigned> comp_of(d.strands());
    {
        std::vector<unsigned> tok(d.strands());
        std::iota(tok.begin(), tok.end(), 0u);
        for (const Rung& rg : d.rungs()) std::swap(tok[rg.pair - 1], tok[rg.pair]);
        std::vector<char> seen(d.strands(), 0);
        unsigned next = 0;
        for (unsigned i = 0; i < d.strands(); ++i) {
            if (seen[i]) continue;
            for (unsigned j = i; !seen[j]; j = tok[j]) {
                seen[j] = 1;
                comp_of[j] = next;
            }
            ++next;
        }
    }

    CensusSummary summary;
    summary.entries.resize(total);

    auto classify = [&](std::uint64_t mask, CensusEntry& e) {
        e.mask = mask;
        e.components = components;
        auto sign_at = [mask](std::size_t k) {
            return (mask >> k) & 1 ? RungSign::Over : RungSign::Under;
        };
        if (components == 1) {
            std::vector<int> floors{d.base_floors()[0]};
            walk_loop(d, at, 0, floors[0], sign_at, [&](int f) { floors.push_back(f); });
            NumberingSequence seq(std::move(floors), d.strands());
            e.sequence = seq.string();
            if (d.strands() == 2) {
                // The closure is a torus loop around the net writhe; cancelling
                // pairs can skew the row sums without changing the loop, so the
                // writhe alone decides.
                const long long writhe = 2ll * std::popcount(mask) - static_cast<long long>(r);
                e.knot_candidate = std::abs(writhe) >= 3;
            } else {
                e.knot_candidate = crossing_matrix(seq).verdict == Verdict::KnotCandidate;
            }
        } else {
            // Signed crossings between distinct loops, tracked by sliding the
            // loop occupants down the ladder; any nonzero pair total means a
            // nonzero linking number.
            std::vector<long long> cross(components * components, 0);
            std::vector<unsigned> occ(comp_of);
            bool linked = false;
            for (std::size_t k = 0; k < d.rungs().size(); ++k) {
                const unsigned p = d.rungs()[k].pair - 1;
                const unsigned a = occ[p], b = occ[p + 1];
                if (a != b) {
                    cross[std::min(a, b) * components + std::max(a, b)] +=
                        sign_at(k) == RungSign::Over ? 1 : -1;
                }
                std::swap(occ[p], occ[p + 1]);
            }
            for (long long v : cross)
                if (v != 0) linked = true;
            e.linked = linked;
        }
    };

    unsigned want = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (want == 0) want = 1;
    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(want, total));
    if (threads <= 1) {
        for (std::uint64_t mask = 0; mask < total; ++mask)
            classify(mask, summary.entries[mask]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::uint64_t mask = t; mask < total; mask += threads)
                    classify(mask, summary.entries[mask]);
            });
        for (auto& th : pool) th.join();
    }

    for (const CensusEntry& e : summary.entries) {
        if (e.components > 1) {
            ++summary.multi_component;
            if (e.linked) ++summary.linked;
        } else if (e.knot_candidate) {
            ++summary.knot_candidates;
        } else {
            ++summary.unknot_reducible;
        }
    }
    return summary;
}

SeifertMatrix seifert_matrix_from_ladder(const LadderDiagram& d) {
    if (d.strands() != 2)
        throw Unsupported("band Seifert matrices are defined for 2-strand ladders");
    if (count_components(d) != 1)
        throw MultiComponent("band Seifert matrix needs a single closed loop");
    const auto& rungs = d.rungs();
    const std::size_t n = rungs.size();
    std::vector<int> eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = rungs[i].sign == RungSign::Over ? 1 : -1;

    SeifertMatrix V(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        V.at(j, j) = (eps[j] + eps[j + 1]) / 2;
        if (j + 2 < n) {
            V.at(j, j + 1) = (eps[j + 1] - 1) / 2;
            V.at(j + 1, j) = (eps[j + 1] + 1) / 2;
        }
    }
    return V;
}

} // namespace knotmat
