// knotcert: exact knot invariants (Alexander/Conway polynomials, signature,
// rational Alexander module) and ribbon-concordance certificates, from braid
// words, PD codes or Seifert matrices.

#include "knotcert/render.hpp"
#include "knotcert/table.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace knotcert;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cmd_invariants(const std::string& kind, const std::string& payload, const std::string& file,
                   const std::string& format) {
    std::string text = payload;
    bool have_payload = !payload.empty();
    if (!file.empty()) {
        if (have_payload) throw input_error("give either an inline payload or --file, not both");
        text = slurp(file);  // an empty pd file is a valid unknot presentation
        have_payload = true;
    }
    if (!have_payload) throw input_error("no payload given");
    auto rep = full_report(parse_presentation(kind, text));
    if (format == "json")
        std::cout << to_json(rep).dump(2) << "\n";
    else
        std::cout << render_text(rep);
    return 0;
}

int cmd_compare(const std::string& kind_a, const std::string& payload_a, const std::string& kind_b,
                const std::string& payload_b, const std::string& format) {
    auto ra = full_report(parse_presentation(kind_a, payload_a));
    auto rb = full_report(parse_presentation(kind_b, payload_b));
    auto rep = ribbon_obstructions(ra, rb);
    if (format == "json")
        std::cout << to_json(rep).dump(2) << "\n";
    else
        std::cout << render_text(rep);
    return 0;  // obstruction results are data, not errors
}

int cmd_scan(const std::string& table_path, const std::string& report_path, unsigned jobs,
             const std::string& format) {
    auto table = parse_knot_table_file(table_path);
    auto rep = scan_table(table, jobs);
    std::string body = format == "json" ? to_json(rep).dump(2) + "\n" : render_text(rep);
    if (report_path.empty() || report_path == "-") {
        std::cout << body;
    } else {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw input_error("cannot write report to '" + report_path + "'");
        out << body;
        if (!out) throw input_error("failed while writing '" + report_path + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact knot invariants and ribbon-concordance certificates"};
    app.require_subcommand(1);

    auto* inv = app.add_subcommand("invariants", "full invariant profile of one presentation");
    std::string inv_kind = "braid", inv_payload, inv_file, inv_format = "text";
    inv->add_option("--kind", inv_kind, "braid | pd | seifert")
        ->check(CLI::IsMember({"braid", "pd", "seifert"}));
    inv->add_option("payload", inv_payload, "inline presentation payload");
    inv->add_option("--file", inv_file, "read the payload from a file");
    inv->add_option("--format", inv_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmp = app.add_subcommand("compare", "ribbon-concordance obstructions for K0 <= K1");
    std::string a_kind, a_payload, b_kind, b_payload, cmp_format = "text";
    cmp->add_option("kind0", a_kind, "presentation kind of the candidate K0")->required();
    cmp->add_option("payload0", a_payload, "payload of K0")->required();
    cmp->add_option("kind1", b_kind, "presentation kind of the target K1")->required();
    cmp->add_option("payload1", b_payload, "payload of K1")->required();
    cmp->add_option("--format", cmp_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* scan = app.add_subcommand("scan", "batch reports over a knot table");
    std::string table_path, report_path, scan_format = "text";
    unsigned jobs = 0;
    scan->add_option("table", table_path, "table file: 'name ; kind ; payload' per line")
        ->required();
    scan->add_option("--report", report_path, "write the report here instead of stdout");
    scan->add_option("--jobs", jobs, "worker threads (default: logical cores)");
    scan->add_option("--format", scan_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);
    try {
        if (inv->parsed()) return cmd_invariants(inv_kind, inv_payload, inv_file, inv_format);
        if (cmp->parsed()) return cmd_compare(a_kind, a_payload, b_kind, b_payload, cmp_format);
        if (scan->parsed()) return cmd_scan(table_path, report_path, jobs, scan_format);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
