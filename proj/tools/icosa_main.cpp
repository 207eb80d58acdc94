// Command-line front end: group tables, irrep matrices, reduced bases,
// symmetry-adapted set reports, Hueckel blocks, and the self-check
// suite, with deterministic JSON or CSV output.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "icosa/errors.hpp"
#include "icosa/huckel.hpp"
#include "icosa/verify.hpp"

using json = nlohmann::ordered_json;
using namespace icosa;

namespace {

// Fixed 12-significant-digit formatting keeps output byte-identical
// across runs and platforms. Magnitudes below 1e-12 print as zero so
// exact entries do not show rounding dust.
double num(double x) {
    if (std::fabs(x) < 1e-12) return 0.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

json jcplx(const cplx& z) { return json::array({num(z.real()), num(z.imag())}); }

json jmatrix(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(jcplx(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json jreals(const std::vector<double>& v) {
    json out = json::array();
    for (double x : v) out.push_back(num(x));
    return out;
}

json jvector(const Eigen::VectorXcd& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(jcplx(v[i]));
    return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string strip_underscores(std::string s) {
    std::string out;
    for (char c : s)
        if (c != '_') out.push_back(c);
    return out;
}

struct CsvWriter {
    std::ostringstream os;
    bool first = true;
    void cell(const std::string& s) {
        if (!first) os << ",";
        os << s;
        first = false;
    }
    void endrow() {
        os << "\n";
        first = true;
    }
};

int cmd_group_table(const std::string& format, bool with_parity) {
    Group group;
    int n = with_parity ? Group::n_elements : Group::n_rotations;
    if (format == "csv") {
        CsvWriter csv;
        csv.cell("");
        for (int y = 0; y < n; ++y) csv.cell(group.element(y).label);
        csv.endrow();
        for (int x = 0; x < n; ++x) {
            csv.cell(group.element(x).label);
            for (int y = 0; y < n; ++y)
                csv.cell(group.element(group.multiply(x, y)).label);
            csv.endrow();
        }
        std::cout << csv.os.str();
        return 0;
    }
    json doc;
    doc["schema"] = 1;
    doc["command"] = "group table";
    doc["order"] = n;
    json elems = json::array();
    for (int id = 0; id < n; ++id) {
        const GroupElement& e = group.element(id);
        json je;
        je["id"] = e.id;
        je["label"] = e.label;
        if (id < Group::n_rotations) {
            je["class"] = group.class_name(group.class_of(id));
            const Decomposition& w = group.decomposition(id);
            je["decomposition"] = {{"a", w.a}, {"b", w.b}, {"c", w.c},
                                   {"d", w.d}};
        } else {
            je["inverted"] = group.element(id - Group::n_rotations).label;
        }
        elems.push_back(std::move(je));
    }
    doc["elements"] = std::move(elems);
    json classes = json::array();
    for (int c = 0; c < group.n_classes(); ++c) {
        json jc;
        jc["name"] = group.class_name(c);
        jc["size"] = group.class_members(c).size();
        json members = json::array();
        for (int id : group.class_members(c))
            members.push_back(group.element(id).label);
        jc["members"] = std::move(members);
        classes.push_back(std::move(jc));
    }
    doc["classes"] = std::move(classes);
    json table = json::array();
    for (int x = 0; x < n; ++x) {
        json row = json::array();
        for (int y = 0; y < n; ++y) row.push_back(group.multiply(x, y));
        table.push_back(std::move(row));
    }
    doc["table"] = std::move(table);
    emit(doc);
    return 0;
}

int cmd_irreps_characters(const std::string& format) {
    Group group;
    IrrepSet irreps(group);
    Eigen::MatrixXd table = irreps.character_table();
    if (format == "csv") {
        CsvWriter csv;
        csv.cell("rep");
        for (int c = 0; c < group.n_classes(); ++c)
            csv.cell(group.class_name(c));
        csv.endrow();
        csv.cell("size");
        for (int c = 0; c < group.n_classes(); ++c)
            csv.cell(std::to_string(group.class_members(c).size()));
        csv.endrow();
        for (size_t r = 0; r < IrrepSet::names().size(); ++r) {
            csv.cell(IrrepSet::names()[r]);
            for (int c = 0; c < group.n_classes(); ++c) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.12g", num(table(r, c)));
                csv.cell(buf);
            }
            csv.endrow();
        }
        std::cout << csv.os.str();
        return 0;
    }
    json doc;
    doc["schema"] = 1;
    doc["command"] = "irreps characters";
    json classes = json::array();
    for (int c = 0; c < group.n_classes(); ++c)
        classes.push_back({{"name", group.class_name(c)},
                           {"size", group.class_members(c).size()}});
    doc["classes"] = std::move(classes);
    json rows;
    for (size_t r = 0; r < IrrepSet::names().size(); ++r) {
        json row = json::array();
        for (int c = 0; c < group.n_classes(); ++c)
            row.push_back(num(table(r, c)));
        rows[IrrepSet::names()[r]] = std::move(row);
    }
    doc["table"] = std::move(rows);
    emit(doc);
    return 0;
}

int cmd_irreps_matrix(const std::string& rep, const std::string& element) {
    Group group;
    IrrepSet irreps(group);
    std::string name = strip_underscores(rep);
    int id = group.id_of(element);
    json doc;
    doc["schema"] = 1;
    doc["command"] = "irreps";
    doc["element"] = element;
    bool parity_name = false;
    for (const auto& pn : IrrepSet::parity_names())
        if (name == pn) parity_name = true;
    if (parity_name) {
        ParityIrrep pr = irreps.parity_rep(name);
        doc["rep"] = name;
        doc["dim"] = pr.base->dim;
        doc["rows"] = pr.base->rows;
        doc["matrix"] = jmatrix(pr.at(id));
    } else {
        const Irrep& r = irreps.rep(name);
        doc["rep"] = r.name;
        doc["dim"] = r.dim;
        doc["rows"] = r.rows;
        doc["matrix"] = jmatrix(r.at(id));
    }
    emit(doc);
    return 0;
}

int cmd_bases(const std::string& rep, bool has_pair, int mu, int nu,
              const std::string& parity, double tol) {
    Group group;
    IrrepSet irreps(group);
    Algebra algebra(group, irreps, tol);
    const Irrep& r = irreps.rep(strip_underscores(rep));
    char gu = parity.empty() ? 0 : parity[0];
    int n_labels = gu ? Group::n_elements : Group::n_rotations;

    json doc;
    doc["schema"] = 1;
    doc["command"] = "bases";
    doc["rep"] = r.name;
    if (gu) doc["parity"] = parity;
    json vectors = json::array();
    for (int i = 0; i < r.dim; ++i)
        for (int j = 0; j < r.dim; ++j) {
            if (has_pair && (r.rows[i] != mu || r.rows[j] != nu)) continue;
            ReductionCoefficients rc =
                algebra.coefficients(r.name, r.rows[i], r.rows[j]);
            AlgebraVector v =
                gu ? algebra.parity_basis(r.name, r.rows[i], r.rows[j], gu)
                   : algebra.psi(r.name, r.rows[i], r.rows[j]);
            json jv;
            jv["mu"] = r.rows[i];
            jv["nu"] = r.rows[j];
            jv["families"] = rc.families;
            json coeffs = json::array();
            for (const cplx& c : rc.C) coeffs.push_back(jcplx(c));
            jv["C"] = std::move(coeffs);
            jv["N"] = num(rc.N);
            json comps;
            for (int x = 0; x < n_labels; ++x)
                comps[group.element(x).label] = jcplx(v[x]);
            jv["psi"] = std::move(comps);
            vectors.push_back(std::move(jv));
        }
    if (has_pair && vectors.empty())
        throw IndexInvalid("row labels are not valid for " + r.name);
    doc["vectors"] = std::move(vectors);
    emit(doc);
    return 0;
}

int cmd_sab_b12h12(const std::string& quanta_arg, bool with_vectors,
                   double tol) {
    QuantaState seed_state{};
    {
        std::istringstream is(quanta_arg);
        std::string tok;
        int k = 0;
        while (std::getline(is, tok, ',')) {
            if (k >= 12) throw IndexInvalid("expected 12 quanta");
            size_t used = 0;
            int value = std::stoi(tok, &used);
            if (used != tok.size() || value < 0)
                throw IndexInvalid("quanta must be non-negative integers");
            seed_state[k++] = value;
        }
        if (k != 12) throw IndexInvalid("expected 12 quanta");
    }
    Group group;
    IrrepSet irreps(group);
    Algebra algebra(group, irreps, tol);
    int seed = 0;
    StateSpace space = b12h12_space(group, seed_state, &seed);
    SetsReport report = independent_sets_report(algebra, space, seed);

    json doc;
    doc["schema"] = 1;
    doc["command"] = "sab b12h12";
    doc["quanta"] = std::vector<int>(seed_state.begin(), seed_state.end());
    doc["orbit_size"] = report.orbit_size;
    json counts;
    int sets = 0;
    for (const auto& [name, count] : report.counts) {
        counts[name] = count;
        sets += count;
    }
    doc["sets"] = std::move(counts);
    doc["set_count"] = sets;
    doc["total_dim"] = report.total_dim;
    doc["complete"] = report.total_dim == report.orbit_size;
    if (with_vectors) {
        doc["states"] = space.labels();
        json all = json::array();
        for (const auto& name : IrrepSet::names())
            for (const SabSet& s : generate_sab(algebra, name, space, seed)) {
                json js;
                js["rep"] = s.rep;
                js["tau"] = s.tau;
                js["nu"] = s.nu;
                js["mus"] = s.mus;
                json vecs = json::array();
                for (const auto& v : s.vectors) vecs.push_back(jvector(v));
                js["vectors"] = std::move(vecs);
                all.push_back(std::move(js));
            }
        doc["sab"] = std::move(all);
    }
    emit(doc);
    return report.total_dim == report.orbit_size ? 0 : 1;
}

json block_json(const BlockReport& b) {
    json jb;
    jb["rep"] = b.rep;
    jb["dim"] = b.dim;
    jb["nus"] = b.nus;
    jb["block"] = jmatrix(b.block);
    jb["eigenvalues"] = jreals(b.eigenvalues);
    jb["hermiticity_dev"] = num(b.hermiticity_dev);
    jb["row_dev"] = num(b.row_dev);
    return jb;
}

int cmd_huckel(const std::string& kind, char arrangement, double alpha,
               const std::string& block_name, double tol) {
    Group group;
    IrrepSet irreps(group);
    Algebra algebra(group, irreps, tol);
    const bool is60 = kind == "c60";
    HuckelModel model = is60 ? build_c60(group, alpha)
                             : build_c240(group, arrangement, alpha);
    parity_action(model);

    json doc;
    doc["schema"] = 1;
    doc["command"] = "huckel " + kind;
    doc["alpha"] = num(alpha);
    if (!is60) doc["arrangement"] = std::string(1, arrangement);

    bool ok = true;
    std::vector<BlockTableComparison> tables =
        is60 ? c60_block_tables(model, algebra)
             : c240_block_tables(model, algebra);
    double closed_gate = std::max(tol, 1e-8);
    std::string want = strip_underscores(block_name);
    if (want.size() == 3 && want[0] == 'A' && want[1] == '1') want.erase(1, 1);
    json blocks = json::array();
    std::vector<BlockReport> reports;
    for (auto& cmp : tables) {
        if (!want.empty() && want != cmp.computed.rep) continue;
        json jb = block_json(cmp.computed);
        jb["expected"] = jmatrix(cmp.expected);
        jb["entry_dev"] = num(cmp.entry_dev);
        if (cmp.entry_dev > tol) ok = false;
        if (is60) {
            std::vector<double> closed =
                closed_form_spectrum_c60(cmp.computed.rep, alpha);
            jb["closed_form"] = jreals(closed);
            for (size_t i = 0; i < closed.size(); ++i)
                if (std::abs(closed[i] - cmp.computed.eigenvalues[i]) >
                    closed_gate)
                    ok = false;
        }
        blocks.push_back(std::move(jb));
        reports.push_back(std::move(cmp.computed));
    }
    if (blocks.empty())
        throw IndexInvalid("unknown block " + block_name);
    doc["blocks"] = std::move(blocks);

    if (block_name.empty()) {
        SpectrumReport spec = spectrum_check(model, reports, closed_gate);
        doc["dense_spectrum"] = jreals(spec.dense);
        doc["block_union"] = jreals(spec.block_union);
        doc["spectrum_max_dev"] = num(spec.max_dev);
        doc["spectrum_worst_rep"] = spec.worst_rep;
    }
    doc["pass"] = ok;
    emit(doc);
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& format, double tol) {
    std::vector<CheckResult> results = run_all(tol);
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;
    if (format == "json") {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "verify";
        doc["pass"] = all_pass;
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back({{"name", r.name},
                              {"pass", r.pass},
                              {"detail", r.detail}});
        doc["checks"] = std::move(checks);
        emit(doc);
    } else {
        for (const auto& r : results)
            std::printf("%s  %-28s %s\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.detail.c_str());
        std::printf("%s  %zu checks\n", all_pass ? "PASS" : "FAIL",
                    results.size());
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Icosahedral group, irreps, reduced bases, and Hueckel "
                 "block diagonalization"};
    app.require_subcommand(1);
    double tol = 1e-9;
    app.add_option("--tol", tol,
                   "Numeric tolerance applied by verification checks")
        ->capture_default_str();

    std::string format = "json";
    bool with_parity = false;
    CLI::App* group_cmd = app.add_subcommand("group", "Group structure");
    CLI::App* group_table =
        group_cmd->add_subcommand("table", "Multiplication table");
    group_table->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    group_table->add_flag("--parity", with_parity,
                          "Include the inverted half (120 elements)");
    group_cmd->require_subcommand(1);

    std::string rep, element = "E";
    CLI::App* irreps_cmd =
        app.add_subcommand("irreps", "Irreducible representations");
    CLI::App* irreps_chars =
        irreps_cmd->add_subcommand("characters", "Character table");
    irreps_chars->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    irreps_cmd->add_option("--rep", rep, "Irrep name (A, T1, T2, G, H, or a "
                                         "parity form like Hu)");
    irreps_cmd->add_option("--element", element, "Element label");
    irreps_cmd->add_option("--format", format, "json")
        ->check(CLI::IsMember({"json"}));

    std::string bases_rep, bases_parity;
    int bmu = 0, bnu = 0;
    CLI::App* bases_cmd =
        app.add_subcommand("bases", "Reduced bases of the group algebra");
    bases_cmd->add_option("--rep", bases_rep, "Irrep name")->required();
    CLI::Option* omu = bases_cmd->add_option("--mu", bmu, "Row label");
    CLI::Option* onu = bases_cmd->add_option("--nu", bnu, "Column label");
    omu->needs(onu);
    onu->needs(omu);
    bases_cmd->add_option("--parity", bases_parity, "g or u")
        ->check(CLI::IsMember({"g", "u"}));
    bases_cmd->add_option("--format", format, "json")
        ->check(CLI::IsMember({"json"}));

    std::string quanta;
    bool with_vectors = false;
    CLI::App* sab_cmd =
        app.add_subcommand("sab", "Symmetry-adapted basis reports");
    CLI::App* b12_cmd =
        sab_cmd->add_subcommand("b12h12", "Vibration quanta orbit");
    b12_cmd->add_option("--quanta", quanta, "12 comma-separated quanta")
        ->required();
    b12_cmd->add_flag("--vectors", with_vectors,
                      "Include the full basis vectors");
    b12_cmd->add_option("--format", format, "json")
        ->check(CLI::IsMember({"json"}));
    sab_cmd->require_subcommand(1);

    double alpha = 1.0;
    std::string block_name, arrangement = "a";
    CLI::App* huckel_cmd = app.add_subcommand("huckel", "Hueckel models");
    CLI::App* c60_cmd = huckel_cmd->add_subcommand("c60", "60-site model");
    c60_cmd->add_option("--alpha", alpha, "Bond parameter")
        ->capture_default_str();
    c60_cmd->add_option("--block", block_name, "Restrict to one parity "
                                               "irrep block");
    c60_cmd->add_option("--format", format, "json")
        ->check(CLI::IsMember({"json"}));
    CLI::App* c240_cmd = huckel_cmd->add_subcommand("c240", "240-site model");
    c240_cmd->add_option("--alpha", alpha, "Bond parameter")
        ->capture_default_str();
    c240_cmd->add_option("--arrangement", arrangement, "a or b")
        ->check(CLI::IsMember({"a", "b"}));
    c240_cmd->add_option("--block", block_name, "Restrict to one parity "
                                                "irrep block");
    c240_cmd->add_option("--format", format, "json")
        ->check(CLI::IsMember({"json"}));
    huckel_cmd->require_subcommand(1);

    std::string verify_format = "text";
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run every internal consistency check");
    verify_cmd->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (group_table->parsed()) return cmd_group_table(format, with_parity);
        if (irreps_cmd->parsed()) {
            if (irreps_chars->parsed()) return cmd_irreps_characters(format);
            if (rep.empty()) {
                std::cerr << "error: --rep is required\n";
                return 2;
            }
            return cmd_irreps_matrix(rep, element);
        }
        if (bases_cmd->parsed())
            return cmd_bases(bases_rep, omu->count() > 0, bmu, bnu,
                             bases_parity, tol);
        if (b12_cmd->parsed())
            return cmd_sab_b12h12(quanta, with_vectors, tol);
        if (c60_cmd->parsed())
            return cmd_huckel("c60", 0, alpha, block_name, tol);
        if (c240_cmd->parsed())
            return cmd_huckel("c240", arrangement[0], alpha, block_name, tol);
        if (verify_cmd->parsed()) return cmd_verify(verify_format, tol);
    } catch (const IndexInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
