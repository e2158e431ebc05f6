// qpascal: generalized Pascal triangles, their quasi variants, ray sequences,
// q-deformations, and the identity-verification suites.
//
// Exit codes: 0 success, 1 verification counterexample, 2 usage error.

#include "qp/qanalogue.hpp"
#include "qp/quasi.hpp"
#include "qp/rays.hpp"
#include "qp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

std::string pad_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j >= width.size()) width.resize(j + 1, 0);
            width[j] = std::max(width[j], row[j].size());
        }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += row[j];
            if (j + 1 < row.size()) out.append(width[j] - row[j].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

std::string join_csv(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += row[j];
        }
        out += '\n';
    }
    return out;
}

std::string render_document(const std::string& format, const std::string& kind,
                            const ordered_json& params,
                            const std::vector<std::vector<std::string>>& cells,
                            const ordered_json& payload) {
    if (format == "plain") return pad_columns(cells);
    if (format == "csv") return join_csv(cells);
    ordered_json doc;
    doc["kind"] = kind;
    doc["params"] = params;
    doc["payload"] = payload;
    return doc.dump(2) + "\n";
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 2;
    }
    f << text;
    return 0;
}

ordered_json qpoly_json(const qp::QPoly& p) {
    ordered_json coeffs = ordered_json::array();
    for (const qp::ExactInt& c : p.coeffs()) coeffs.push_back(c.str());
    if (p.is_zero()) coeffs.push_back("0"); // keep at least the constant term
    return ordered_json{{"coeffs", coeffs}, {"text", qpoly_to_string(p)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized and quasi Pascal triangle toolkit"};
    app.require_subcommand(1);

    long long s = 1, n = 0, k = 0, rows = 1, count = 1, alpha = 1, beta = 0, r = 1;
    std::string format = "plain", method, kind, suite = "all", out_path;
    const auto format_check = CLI::IsMember({"plain", "csv", "json"});

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(format_check);
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* c_triangle = app.add_subcommand("triangle", "rows of the quasi s-Pascal triangle");
    c_triangle->add_option("--s", s, "step parameter")->required();
    c_triangle->add_option("--rows", rows, "row count")->required()->check(CLI::PositiveNumber);
    add_common(c_triangle);

    CLI::App* c_coef = app.add_subcommand("coef", "one quasi coefficient by a chosen method");
    c_coef->add_option("--s", s)->required();
    c_coef->add_option("--n", n)->required();
    c_coef->add_option("--k", k)->required();
    c_coef->add_option("--method", method, "computation route")
        ->required()
        ->check(CLI::IsMember({"lattice", "recurrence", "explicit", "multinomial", "spascal", "demoivre"}));
    add_common(c_coef);

    CLI::App* c_seq = app.add_subcommand("sequence", "s-bonacci or ray-sum sequence");
    c_seq->add_option("--s", s)->required();
    c_seq->add_option("--kind", kind)->required()->check(CLI::IsMember({"sbonacci", "ray"}));
    c_seq->add_option("--count", count, "terms to emit")->required()->check(CLI::PositiveNumber);
    CLI::Option* o_alpha = c_seq->add_option("--alpha", alpha, "ray direction numerator");
    CLI::Option* o_beta = c_seq->add_option("--beta", beta, "ray offset");
    CLI::Option* o_r = c_seq->add_option("--r", r, "ray direction denominator");
    add_common(c_seq);

    CLI::App* c_qtri = app.add_subcommand("qtriangle", "rows of the q-quasi triangle");
    c_qtri->add_option("--s", s)->required();
    c_qtri->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
    add_common(c_qtri);

    CLI::App* c_del = app.add_subcommand("delannoy", "unit-weight generalized Delannoy table");
    c_del->add_option("--s", s, "recurrence depth m")->required();
    c_del->add_option("--rows", rows, "table extent in both indices")->required()->check(CLI::PositiveNumber);
    add_common(c_del);

    CLI::App* c_verify = app.add_subcommand("verify", "run an identity-verification suite");
    c_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "bisnomial", "quasi", "rays", "q", "gf", "tables"}));
    add_common(c_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_triangle->parsed()) {
            qp::TriangleTable t = qp::triangle_rows(static_cast<int>(s), rows);
            std::vector<std::vector<std::string>> cells;
            ordered_json jrows = ordered_json::array();
            for (const auto& row : t.rows) {
                std::vector<std::string> line;
                ordered_json jrow = ordered_json::array();
                for (const qp::ExactInt& v : row) {
                    line.push_back(v.str());
                    jrow.push_back(v.str());
                }
                cells.push_back(std::move(line));
                jrows.push_back(std::move(jrow));
            }
            ordered_json params{{"command", "triangle"}, {"s", s}, {"rows", rows}};
            return emit(render_document(format, "triangle", params, cells,
                                        ordered_json{{"rows", jrows}}),
                        out_path);
        }

        if (c_coef->parsed()) {
            qp::ExactInt value;
            if (method == "lattice") value = qp::quasi_by_lattice_oracle(static_cast<int>(s), n, k);
            else if (method == "recurrence") value = qp::quasi_by_recurrence(static_cast<int>(s), n, k);
            else if (method == "explicit") value = qp::quasi_by_explicit_binomial(static_cast<int>(s), n, k);
            else if (method == "multinomial") value = qp::quasi_by_explicit_multinomial(static_cast<int>(s), n, k);
            else if (method == "spascal") value = qp::quasi_by_spascal_link(static_cast<int>(s), n, k);
            else value = qp::quasi_by_demoivre_dual(static_cast<int>(s), n, k);
            std::vector<std::vector<std::string>> cells{{value.str()}};
            ordered_json params{{"command", "coef"}, {"s", s}, {"n", n}, {"k", k}, {"method", method}};
            return emit(render_document(format, "coefficient", params, cells,
                                        ordered_json{{"value", value.str()}}),
                        out_path);
        }

        if (c_seq->parsed()) {
            bool ray_flags = o_alpha->count() || o_beta->count() || o_r->count();
            std::vector<qp::ExactInt> terms;
            ordered_json params{{"command", "sequence"}, {"s", s}, {"kind", kind}, {"count", count}};
            if (kind == "ray") {
                if (!o_alpha->count() || !o_r->count()) {
                    std::cerr << "error: --alpha and --r are required for --kind ray\n";
                    return 2;
                }
                qp::Direction d(alpha, beta, r);
                for (long long i = 0; i < count; ++i)
                    terms.push_back(qp::ray_sum_direct(static_cast<int>(s), d, i));
                params["alpha"] = alpha;
                params["beta"] = beta;
                params["r"] = r;
            } else {
                if (ray_flags) {
                    std::cerr << "error: direction flags apply only to --kind ray\n";
                    return 2;
                }
                terms = qp::sbonacci(static_cast<int>(s), count);
            }
            std::vector<std::string> line;
            ordered_json jterms = ordered_json::array();
            for (const qp::ExactInt& v : terms) {
                line.push_back(v.str());
                jterms.push_back(v.str());
            }
            std::string flat;
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (i) flat += ',';
                flat += line[i];
            }
            std::string text = format == "json"
                ? render_document(format, "sequence", params, {}, ordered_json{{"terms", jterms}})
                : flat + "\n";
            return emit(text, out_path);
        }

        if (c_qtri->parsed()) {
            std::vector<std::vector<std::string>> cells;
            ordered_json jrows = ordered_json::array();
            for (long long row = 0; row < rows; ++row) {
                std::vector<std::string> line;
                ordered_json jrow = ordered_json::array();
                for (long long col = 0; col <= row; ++col) {
                    qp::QPoly p = qp::q_quasi(static_cast<int>(s), row, col);
                    line.push_back(qp::qpoly_to_string(p));
                    jrow.push_back(qpoly_json(p));
                }
                cells.push_back(std::move(line));
                jrows.push_back(std::move(jrow));
            }
            ordered_json params{{"command", "qtriangle"}, {"s", s}, {"rows", rows}};
            return emit(render_document(format, "triangle", params, cells,
                                        ordered_json{{"rows", jrows}}),
                        out_path);
        }

        if (c_del->parsed()) {
            qp::DelannoyParams p;
            p.m = static_cast<int>(s);
            p.a = 1;
            p.weights.assign(static_cast<std::size_t>(s), qp::ExactInt(1));
            auto table = qp::delannoy_table(p, rows - 1, rows - 1);
            std::vector<std::vector<std::string>> cells;
            ordered_json jrows = ordered_json::array();
            for (const auto& row : table) {
                std::vector<std::string> line;
                ordered_json jrow = ordered_json::array();
                for (const qp::ExactInt& v : row) {
                    line.push_back(v.str());
                    jrow.push_back(v.str());
                }
                cells.push_back(std::move(line));
                jrows.push_back(std::move(jrow));
            }
            ordered_json params{{"command", "delannoy"}, {"s", s}, {"rows", rows}};
            return emit(render_document(format, "triangle", params, cells,
                                        ordered_json{{"rows", jrows}}),
                        out_path);
        }

        // verify
        std::vector<qp::SuiteResult> results = qp::run_suites(suite);
        bool all_pass = true;
        std::string plain;
        ordered_json jsuites = ordered_json::array();
        for (const qp::SuiteResult& res : results) {
            all_pass = all_pass && res.pass;
            plain += "suite " + res.suite + ": " + (res.pass ? "pass" : "FAIL") + "\n";
            for (const std::string& f : res.failures) plain += "  counterexample: " + f + "\n";
            for (const std::string& note : res.notes) plain += "  note: " + note + "\n";
            ordered_json jres{{"suite", res.suite}, {"pass", res.pass}};
            jres["failures"] = res.failures;
            jres["notes"] = res.notes;
            ordered_json jerrata = ordered_json::array();
            for (const qp::Erratum& e : res.errata)
                jerrata.push_back(ordered_json{{"row", std::to_string(e.row)},
                                               {"col", std::to_string(e.col)},
                                               {"printed", e.printed.str()},
                                               {"recomputed", e.recomputed.str()}});
            jres["errata"] = jerrata;
            jsuites.push_back(std::move(jres));
        }
        ordered_json params{{"command", "verify"}, {"suite", suite}};
        std::string text = format == "json"
            ? render_document(format, "report", params, {}, ordered_json{{"suites", jsuites}})
            : plain;
        int rc = emit(text, out_path);
        if (rc != 0) return rc;
        return all_pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
