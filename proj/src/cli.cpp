#include "ppoly/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ppoly/bases.hpp"
#include "ppoly/classify.hpp"
#include "ppoly/codes.hpp"
#include "ppoly/geometry.hpp"

namespace ppoly::cli {

namespace {

struct Guards {
    int lattice_max_points = 16;
    int lattice_max_dim = 15;
    int classify_max_n = 7;
};

Guards guards_from_env() {
    Guards g;
    if (const char* env = std::getenv("PP_MAX_DIM")) {
        int v = 0;
        try {
            v = std::stoi(env);
        } catch (...) {
            throw std::invalid_argument("PP_MAX_DIM must be an integer");
        }
        if (v < 1) throw std::invalid_argument("PP_MAX_DIM must be positive");
        g.lattice_max_dim = v;
        g.lattice_max_points = 64;
        g.classify_max_n = v;
    }
    return g;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Either "uniform:k,n" inline or a path to a hypergraph JSON file.
PreHypergraph resolve_hypergraph(const std::string& spec) {
    if (spec.rfind("uniform:", 0) == 0) {
        std::string rest = spec.substr(8);
        size_t comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("inline hypergraph spec must look like uniform:k,n");
        int k = 0, n = 0;
        try {
            k = std::stoi(rest.substr(0, comma));
            n = std::stoi(rest.substr(comma + 1));
        } catch (...) {
            throw std::invalid_argument("inline hypergraph spec must look like uniform:k,n");
        }
        return uniform(k, n);
    }
    return hypergraph_from_json(read_file(spec));
}

GF2Matrix read_matrix_text(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<BitWord> rows;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        rows.push_back(bitword_from_string(line));
    }
    if (rows.empty()) throw std::invalid_argument("matrix file is empty: " + path);
    return GF2Matrix(std::move(rows));
}

nlohmann::json set_to_json_array(const BitWord& s) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < s.width; ++i)
        if (s.get(i)) a.push_back(i + 1);
    return a;
}

void emit_statistic_matrix(const StatisticMatrix& m, bool as_json, std::ostream& out) {
    if (as_json) {
        nlohmann::json j;
        switch (m.kind) {
            case BasisKind::parity: j["kind"] = "parity"; break;
            case BasisKind::character: j["kind"] = "character"; break;
            case BasisKind::monomial: j["kind"] = "monomial"; break;
            case BasisKind::marginal: j["kind"] = "marginal"; break;
        }
        j["n"] = m.n;
        if (m.kind == BasisKind::marginal) {
            j["columns"] = nlohmann::json::array();
            for (const auto& [set, y] : m.col_margin) {
                nlohmann::json col;
                col["set"] = set_to_json_array(set);
                nlohmann::json ybits = nlohmann::json::array();
                for (int i = 0; i < y.width; ++i) ybits.push_back(y.get(i) ? 1 : 0);
                col["y"] = ybits;
                j["columns"].push_back(col);
            }
        } else {
            j["columns"] = nlohmann::json::array();
            for (const auto& s : m.col_sets) j["columns"].push_back(set_to_json_array(s));
        }
        j["rows"] = nlohmann::json::array();
        for (int r = 0; r < m.rows; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < m.cols; ++c) row.push_back(m.entry(r, c));
            j["rows"].push_back(row);
        }
        out << j.dump() << '\n';
        return;
    }
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out << '\t';
            out << m.entry(r, c);
        }
        out << '\n';
    }
}

/// Leading three digits only; no rounding, matching "about d.dd * 10^e".
std::string approx_decimal(const BigCount& v) {
    std::string digits = v.str();
    if (digits.size() <= 3) return digits;
    std::string mant = digits.substr(0, 1) + "." + digits.substr(1, 2);
    return mant + "e" + std::to_string(digits.size() - 1);
}

int run_fvector(const PreHypergraph& a, bool as_json, const Guards& g, std::ostream& out) {
    VertexSet01 v = vertex_set_from_rows(parity_matrix(a));
    FaceLattice l = face_lattice(v, g.lattice_max_points, g.lattice_max_dim);
    long long sum = 0;
    for (long long c : l.f_vector) sum += c;
    if (as_json) {
        nlohmann::json j = nlohmann::json::parse(lattice_to_json(l));
        j["sum"] = sum;
        j["simple"] = is_simple(l) ? "y" : "n";
        out << j.dump() << '\n';
        return 0;
    }
    for (int k = 0; k <= l.d; ++k) out << k << ' ' << l.f_vector[static_cast<size_t>(k)] << '\n';
    out << "sum " << sum << '\n';
    out << "simple " << (is_simple(l) ? 'y' : 'n') << '\n';
    return 0;
}

int run_check(const PreHypergraph& a, std::ostream& out) {
    bool all_ok = true;
    bool hyper = is_hypergraph(a);
    out << "hypergraph " << (hyper ? "yes" : "no") << '\n';

    if (hyper) {
        bool ok = verify_parity_basis(a);
        all_ok = all_ok && ok;
        out << "parity-basis " << (ok ? "ok" : "FAIL") << '\n';
    } else {
        out << "parity-basis skipped (not a hypergraph)\n";
    }

    if (a.n <= 8 && a.sets.size() <= 64) {
        bool ok = verify_homomorphism(a);
        all_ok = all_ok && ok;
        out << "xor-homomorphism " << (ok ? "ok" : "FAIL") << '\n';
    } else {
        out << "xor-homomorphism skipped (too large)\n";
    }

    {
        LinearCode c = code_from_hypergraph(a);
        auto back = hypergraph_from_generator(c.generator);
        bool ok = back.hypergraph.n == a.n && back.hypergraph.sets == a.sets && back.duplicates.empty();
        all_ok = all_ok && ok;
        out << "generator-roundtrip " << (ok ? "ok" : "FAIL") << '\n';
    }

    if (a.n <= 4 && a.sets.size() <= 63) {
        VertexSet01 v = vertex_set_from_rows(parity_matrix(a));
        GroupPolytope p = make_group_polytope(v.d, v.points);
        auto subs = index2_subgroups(p.vertices);
        bool ok = true;
        for (const auto& sub : subs) {
            Prop4Result r = lift_equivalence_checks(p, sub.kernel);
            if (!r.all_equal()) ok = false;
        }
        all_ok = all_ok && ok;
        out << "lift-equivalence " << (ok ? "ok" : "FAIL") << " (" << subs.size() << " subgroups)\n";
    } else {
        out << "lift-equivalence skipped (ground size > 4)\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tools for parity polytopes of hypergraph models, their linear codes, "
                 "and XOR-group 0/1 polytopes"};
    app.name("ppoly");
    app.require_subcommand(1);

    int threads = 1;
    app.add_option("--threads", threads, "worker threads (output is independent of this)")
        ->check(CLI::PositiveNumber);

    // vertices
    auto* vertices_cmd = app.add_subcommand("vertices", "emit a generating-system matrix");
    std::string vert_hg;
    std::string vert_basis = "parity";
    std::string vert_format = "tsv";
    vertices_cmd->add_option("--hypergraph", vert_hg, "uniform:k,n or a JSON file")->required();
    vertices_cmd->add_option("--basis", vert_basis, "parity|character|monomial|marginal")
        ->check(CLI::IsMember({"parity", "character", "monomial", "marginal"}));
    vertices_cmd->add_option("--format", vert_format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}));

    // fvector
    auto* fvector_cmd = app.add_subcommand("fvector", "face counts of the parity polytope");
    std::string fv_hg;
    bool fv_json = false;
    fvector_cmd->add_option("--hypergraph", fv_hg, "uniform:k,n or a JSON file")->required();
    fvector_cmd->add_flag("--json", fv_json, "emit the full face lattice as JSON");

    // code
    auto* code_cmd = app.add_subcommand("code", "linear-code side of the correspondence");
    code_cmd->require_subcommand(1);
    auto* code_from = code_cmd->add_subcommand("from-hypergraph", "emit the standard-form generator matrix");
    std::string cf_hg;
    code_from->add_option("input", cf_hg, "uniform:k,n or a JSON file")->required();
    auto* code_to = code_cmd->add_subcommand("to-hypergraph", "read the sets off a standard-form generator");
    std::string ct_file;
    code_to->add_option("input", ct_file, "matrix text file, one 0/1 row per line")->required();
    auto* code_dist = code_cmd->add_subcommand("distance", "minimum distance of the code");
    std::string cd_file;
    code_dist->add_option("input", cd_file, "matrix text file, one 0/1 row per line")->required();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "enumerate group polytopes by dimension");
    int cl_n = 0;
    bool cl_list = false;
    classify_cmd->add_option("--n", cl_n, "ambient dimension")->required()->check(CLI::PositiveNumber);
    classify_cmd->add_flag("--list", cl_list, "also print one polytope per line");

    // count
    auto* count_cmd = app.add_subcommand("count", "counting table for group polytopes");
    int cn_n = 0;
    bool cn_approx = false;
    count_cmd->add_option("--n", cn_n, "largest dimension")->required()->check(CLI::PositiveNumber);
    count_cmd->add_flag("--approx", cn_approx, "summary with leading digits only");

    // convert
    auto* convert_cmd = app.add_subcommand("convert", "JSON <-> cdd-style V-representation");
    convert_cmd->require_subcommand(1);
    auto* conv_to = convert_cmd->add_subcommand("to-vrep", "emit a V-representation");
    std::string cv_hg, cv_points;
    conv_to->add_option("--hypergraph", cv_hg, "uniform:k,n or a JSON file");
    conv_to->add_option("--points", cv_points, "vertex-set JSON file");
    auto* conv_from = convert_cmd->add_subcommand("from-vrep", "emit a vertex-set JSON");
    std::string cv_vrep;
    conv_from->add_option("input", cv_vrep, "V-representation text file")->required();

    // check
    auto* check_cmd = app.add_subcommand("check", "structural verifications on a hypergraph");
    std::string ch_hg;
    check_cmd->add_option("--hypergraph", ch_hg, "uniform:k,n or a JSON file")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        Guards g = guards_from_env();

        if (app.got_subcommand(vertices_cmd)) {
            PreHypergraph a = resolve_hypergraph(vert_hg);
            StatisticMatrix m;
            if (vert_basis == "parity")
                m = parity_matrix(a);
            else if (vert_basis == "character")
                m = character_matrix(a);
            else if (vert_basis == "monomial")
                m = monomial_matrix(a);
            else
                m = marginal_matrix(a);
            emit_statistic_matrix(m, vert_format == "json", out);
            return 0;
        }

        if (app.got_subcommand(fvector_cmd)) return run_fvector(resolve_hypergraph(fv_hg), fv_json, g, out);

        if (app.got_subcommand(code_cmd)) {
            if (code_cmd->got_subcommand(code_from)) {
                LinearCode c = code_from_hypergraph(resolve_hypergraph(cf_hg));
                for (const auto& row : c.generator.row_words) out << to_string(row) << '\n';
                return 0;
            }
            if (code_cmd->got_subcommand(code_to)) {
                auto res = hypergraph_from_generator(read_matrix_text(ct_file));
                for (const auto& [col, set] : res.duplicates)
                    err << "note: column " << col << " duplicates " << set_to_string(set) << " and was dropped\n";
                out << hypergraph_to_json(res.hypergraph) << '\n';
                return 0;
            }
            LinearCode c = make_linear_code(read_matrix_text(cd_file));
            out << min_distance(c) << '\n';
            return 0;
        }

        if (app.got_subcommand(classify_cmd)) {
            auto polys = enumerate_group_polytopes(cl_n, g.classify_max_n);
            out << "n " << cl_n << '\n';
            std::map<int, long long> by_k;
            for (const auto& p : polys) {
                int k = 0;
                while ((size_t(1) << k) < p.vertices.size()) ++k;
                ++by_k[k];
            }
            for (const auto& [k, cnt] : by_k) out << "k " << k << ' ' << cnt << '\n';
            out << "total " << polys.size() << '\n';
            if (cl_list) {
                for (const auto& p : polys) {
                    for (size_t i = 0; i < p.vertices.size(); ++i) {
                        if (i) out << ',';
                        out << to_string(p.vertices[i]);
                    }
                    out << '\n';
                }
            }
            return 0;
        }

        if (app.got_subcommand(count_cmd)) {
            CnkTable t = count_cnk(cn_n);
            for (int n = 1; n <= cn_n; ++n) {
                out << n;
                if (cn_approx) {
                    out << '\t' << approx_decimal(t.row_sums[static_cast<size_t>(n - 1)]) << '\n';
                    continue;
                }
                for (int k = 1; k <= n; ++k) out << '\t' << t.at(n, k).str();
                out << '\t' << t.row_sums[static_cast<size_t>(n - 1)].str() << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(convert_cmd)) {
            if (convert_cmd->got_subcommand(conv_to)) {
                if (cv_hg.empty() == cv_points.empty())
                    throw std::invalid_argument("convert to-vrep: pass exactly one of --hypergraph / --points");
                VertexSet01 v = cv_hg.empty() ? vertex_set_from_json(read_file(cv_points))
                                              : vertex_set_from_rows(parity_matrix(resolve_hypergraph(cv_hg)));
                out << to_vrep(v);
                return 0;
            }
            VertexSet01 v = vertex_set_from_vrep(read_file(cv_vrep));
            out << vertex_set_to_json(v) << '\n';
            return 0;
        }

        if (app.got_subcommand(check_cmd)) return run_check(resolve_hypergraph(ch_hg), out);

        err << "usage error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace ppoly::cli
