#pragma once

#include "knotcert/certify.hpp"
#include "knotcert/render.hpp"

#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace knotcert {

/// One line of a knot table: `name ; kind ; payload`, '#' starts a comment.
struct KnotTableEntry {
    std::string name;
    std::string kind;
    std::string payload;
    std::string parse_error;  // nonempty when the line itself was malformed
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace detail

/// Parse a table; malformed lines become entries carrying a parse error so a
/// scan can report them individually.  Duplicate names are a table-level
/// error.
inline std::vector<KnotTableEntry> parse_knot_table(std::istream& in) {
    std::vector<KnotTableEntry> out;
    std::set<std::string> names;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (detail::trim(line).empty()) continue;
        KnotTableEntry e;
        auto p1 = line.find(';');
        auto p2 = p1 == std::string::npos ? std::string::npos : line.find(';', p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos) {
            e.name = "line-" + std::to_string(lineno);
            e.parse_error = "expected 'name ; kind ; payload'";
            out.push_back(e);
            continue;
        }
        e.name = detail::trim(line.substr(0, p1));
        e.kind = detail::trim(line.substr(p1 + 1, p2 - p1 - 1));
        e.payload = detail::trim(line.substr(p2 + 1));
        if (e.name.empty()) {
            e.name = "line-" + std::to_string(lineno);
            e.parse_error = "empty name";
        } else if (!names.insert(e.name).second) {
            e.parse_error = "duplicate name '" + e.name + "'";
        }
        out.push_back(e);
    }
    return out;
}

inline std::vector<KnotTableEntry> parse_knot_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open table file '" + path + "'");
    return parse_knot_table(in);
}

struct ScanEntryResult {
    std::string name;
    std::string error;  // empty on success
    std::optional<InvariantReport> report;
};

struct ScanSummary {
    long entries = 0;
    long errors = 0;
    long positive_diagrams = 0;
    long no_rational_roots_on_positive = 0;
    long conway_nonnegative_on_positive = 0;
    long rational_roots_reported = 0;
    long witnessed_roots = 0;
    long witness_violations = 0;  // roots without an (a-1)/a witness; theory says none
    long anisotropy_certified = 0;
    long band_prime_certified = 0;
    long minimal_certified = 0;
    long module_rigidity_certified = 0;
};

struct ScanReport {
    std::vector<ScanEntryResult> entries;  // input order
    ScanSummary summary;
};

/// Run full reports over a table.  Entries are independent; `jobs` caps the
/// worker threads and never affects results or their order.
inline ScanReport scan_table(const std::vector<KnotTableEntry>& table, unsigned jobs = 0) {
    ScanReport rep;
    rep.entries.resize(table.size());
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = std::min<unsigned>(jobs, std::max<std::size_t>(table.size(), 1));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= table.size()) return;
            const auto& e = table[i];
            auto& slot = rep.entries[i];
            slot.name = e.name;
            if (!e.parse_error.empty()) {
                slot.error = e.parse_error;
                continue;
            }
            try {
                slot.report = full_report(parse_presentation(e.kind, e.payload));
            } catch (const std::exception& ex) {
                slot.error = ex.what();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    auto& s = rep.summary;
    s.entries = (long)rep.entries.size();
    for (const auto& e : rep.entries) {
        if (!e.report) {
            ++s.errors;
            continue;
        }
        const auto& r = *e.report;
        bool pos = r.positivity == Positivity::Positive;
        if (pos) {
            ++s.positive_diagrams;
            if (r.roots.roots.empty()) ++s.no_rational_roots_on_positive;
            if (r.nabla.all_nonnegative()) ++s.conway_nonnegative_on_positive;
        }
        for (const auto& rt : r.roots.roots) {
            ++s.rational_roots_reported;
            if (rt.witness)
                ++s.witnessed_roots;
            else
                ++s.witness_violations;
        }
        if (r.anisotropy.certified) ++s.anisotropy_certified;
        if (r.band_prime.certified) ++s.band_prime_certified;
        if (r.minimal.certified) ++s.minimal_certified;
        if (r.module_rigidity.certified) ++s.module_rigidity_certified;
    }
    return rep;
}

inline json to_json(const ScanReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json j{{"name", e.name}};
        if (e.report)
            j["report"] = to_json(*e.report);
        else
            j["error"] = e.error;
        entries.push_back(j);
    }
    const auto& s = rep.summary;
    json summary{{"entries", s.entries},
                 {"errors", s.errors},
                 {"positive_diagrams", s.positive_diagrams},
                 {"no_rational_roots_on_positive", s.no_rational_roots_on_positive},
                 {"conway_nonnegative_on_positive", s.conway_nonnegative_on_positive},
                 {"rational_roots_reported", s.rational_roots_reported},
                 {"witnessed_roots", s.witnessed_roots},
                 {"witness_violations", s.witness_violations},
                 {"anisotropy_certified", s.anisotropy_certified},
                 {"band_prime_certified", s.band_prime_certified},
                 {"minimal_certified", s.minimal_certified},
                 {"module_rigidity_certified", s.module_rigidity_certified}};
    return json{{"entries", entries}, {"summary", summary}};
}

inline std::string render_text(const ScanReport& rep) {
    std::ostringstream os;
    for (const auto& e : rep.entries) {
        if (!e.report) {
            os << e.name << ": error: " << e.error << "\n";
            continue;
        }
        const auto& r = *e.report;
        os << e.name << ": delta = " << r.delta.str() << " | sigma = " << r.sigma
           << " | d = " << r.d << " | " << positivity_str(r.positivity) << " | certs:"
           << (r.band_prime.certified ? " band-prime" : "")
           << (r.minimal.certified ? " minimal" : "")
           << (r.module_rigidity.certified ? " module-rigid" : "")
           << (r.anisotropy.certified ? " q-anisotropic" : "") << "\n";
    }
    const auto& s = rep.summary;
    os << "-- summary --\n";
    os << "entries " << s.entries << ", errors " << s.errors << "\n";
    os << "positive diagrams " << s.positive_diagrams << "\n";
    os << "no-rational-roots confirmations (positive) " << s.no_rational_roots_on_positive << "\n";
    os << "conway-nonnegative confirmations (positive) " << s.conway_nonnegative_on_positive << "\n";
    os << "rational roots reported " << s.rational_roots_reported << " (witnessed "
       << s.witnessed_roots << ", violations " << s.witness_violations << ")\n";
    os << "anisotropy certificates " << s.anisotropy_certified << "\n";
    os << "band-prime certificates " << s.band_prime_certified << "\n";
    os << "minimality certificates " << s.minimal_certified << "\n";
    os << "module-rigidity certificates " << s.module_rigidity_certified << "\n";
    return os.str();
}

}  // namespace knotcert
