#include "gsat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "gsat/builtins.hpp"
#include "gsat/classifier.hpp"
#include "gsat/gf2.hpp"
#include "gsat/json_io.hpp"
#include "gsat/normal_forms.hpp"
#include "gsat/oracle.hpp"
#include "gsat/parser.hpp"
#include "gsat/reductions.hpp"
#include "gsat/solve.hpp"
#include "gsat/specialize.hpp"
#include "gsat/twosat.hpp"
#include "gsat/unary_actions.hpp"

namespace gsat::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct LoadedSpec {
    RelationEnv renv;
    TableEnv env;
    std::vector<TypeTable> tables;  // declaration order
};

LoadedSpec load_spec(const std::string& path, bool allow_large,
                     std::ostream* warn = nullptr) {
    LoadedSpec s;
    s.renv = parse_spec(slurp(path));
    for (auto& d : s.renv.defs) {
        TypeTable t = table_of(d, allow_large);
        if (warn && t.size() > 2000)
            *warn << "warning: relation '" << d.name << "' has " << t.size()
                  << " types; ternary preservation scans are cubic\n";
        s.env[d.name] = t;
        s.tables.push_back(std::move(t));
    }
    return s;
}

Instance load_instance(const std::string& path) {
    return instance_from_json(json::parse(slurp(path)));
}

Method method_of(const std::string& name) {
    if (name == "auto") return Method::Auto;
    if (name == "fig2") return Method::Fig2;
    if (name == "fig3") return Method::Fig3;
    if (name == "semilattice") return Method::Semilattice;
    if (name == "equality") return Method::Equality;
    if (name == "trivial") return Method::Trivial;
    return Method::Oracle;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Contraction loop followed by per-constraint Boolean extraction over the
// unordered pairs of surviving variables (the front half of the fig2 route).
json reduce_dump(const TableEnv& env, const Instance& inst, BoolMode bm) {
    check_instance(env, inst);
    int n = int(inst.variables.size());
    std::map<std::string, int> index;
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) {
        uf[i] = i;
        index[inst.variables[i]] = i;
    }
    auto find = [&](int v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    };

    json doc;
    doc["mode"] = bm == BoolMode::Minority ? "affine" : "twosat";
    json merges = json::array();
    auto specialize = [&](const Instance::Constraint& c) {
        std::vector<int> ids;
        for (auto& a : c.args) ids.push_back(find(index.at(a)));
        auto vars = distinct_first_occurrence(ids);
        return std::make_pair(specialize_table(env.at(c.rel), ids), vars);
    };

    bool again = true;
    while (again) {
        again = false;
        for (auto& c : inst.constraints) {
            auto [table, vars] = specialize(c);
            if (table.empty()) {
                doc["merges"] = merges;
                doc["unsat"] = true;
                return doc;
            }
            for (size_t p = 0; p < vars.size() && !again; ++p)
                for (size_t q = p + 1; q < vars.size() && !again; ++q)
                    if (implies_equal(table, int(p), int(q))) {
                        int a = vars[p], b = vars[q];
                        if (inst.variables[b] < inst.variables[a]) std::swap(a, b);
                        uf[b] = a;
                        merges.push_back({inst.variables[a], inst.variables[b]});
                        again = true;
                    }
            if (again) break;
        }
    }
    doc["merges"] = merges;

    std::vector<int> reps;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) reps.push_back(v);
    std::map<int, int> pos;
    for (size_t i = 0; i < reps.size(); ++i) pos[reps[i]] = int(i);
    int nr = int(reps.size());
    json pair_names = json::array();  // emitted in pair_index order
    for (int i = 0; i < nr; ++i)
        for (int j = i + 1; j < nr; ++j)
            pair_names.push_back({inst.variables[reps[i]], inst.variables[reps[j]]});
    doc["pairs"] = pair_names;

    auto pair_id = [&](int a, int b) {
        int i = pos.at(a), j = pos.at(b);
        if (i > j) std::swap(i, j);
        return pair_index(i, j, nr);
    };

    json eqs = json::array();
    json clauses = json::array();
    for (auto& c : inst.constraints) {
        auto [table, vars] = specialize(c);
        int m = int(vars.size());
        if (m < 2) continue;
        TypeTable inj = injectivize(table);
        if (inj.empty()) {
            doc["unsat"] = true;
            doc[bm == BoolMode::Minority ? "equations" : "clauses"] =
                bm == BoolMode::Minority ? eqs : clauses;
            return doc;
        }
        BoolRelation S;
        S.width = pair_count(m);
        for (auto& t : inj.types()) S.insert(bool_of_type(t));
        auto coord_to_pair = [&](int coord) {
            for (int p = 0; p < m; ++p)
                for (int q = p + 1; q < m; ++q)
                    if (pair_index(p, q, m) == coord) return pair_id(vars[p], vars[q]);
            return -1;
        };
        if (bm == BoolMode::Minority) {
            for (auto& eq : affine_basis(S).eqs) {
                json support = json::array();
                for (int b = 0; b < S.width; ++b)
                    if (eq.support.get(b)) support.push_back(coord_to_pair(b));
                eqs.push_back({{"support", support}, {"parity", eq.parity}});
            }
        } else {
            TwoSatInstance cover = two_clause_cover(S);
            for (auto& [a, b] : cover.clauses) {
                json lits = json::array();
                lits.push_back({{"pair", coord_to_pair(a.var)}, {"label", a.pos ? "E" : "N"}});
                lits.push_back({{"pair", coord_to_pair(b.var)}, {"label", b.pos ? "E" : "N"}});
                clauses.push_back({{"lits", lits}});
            }
        }
    }
    doc["unsat"] = false;
    if (bm == BoolMode::Minority)
        doc["equations"] = eqs;
    else
        doc["clauses"] = clauses;
    return doc;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"graph-sat workbench over the countable random graph"};
    app.require_subcommand(1);

    bool allow_large = false;
    app.add_flag("--allow-large-arity", allow_large,
                 "lift the default arity guard of 6 (representation limit: 8)");
    uint64_t budget = kDefaultPreserveBudget;
    app.add_option("--budget", budget, "preservation scan budget (table applications)");
    int cap = 8;
    app.add_option("--cap", cap, "variable cap for the exponential oracle");

    std::string spec_path, inst_path, method_name = "auto", normal_form, mode = "affine";
    std::string gen_kind, gen_file;
    int types_k = 0;
    bool oracle_enumerate = false;

    auto* c_classify = app.add_subcommand("classify", "decide tractable vs NP-complete");
    c_classify->add_option("spec", spec_path)->required();

    auto* c_solve = app.add_subcommand("solve", "solve an instance with the dispatched solver");
    c_solve->add_option("spec", spec_path)->required();
    c_solve->add_option("instance", inst_path)->required();
    c_solve->add_option("--method", method_name)
        ->check(CLI::IsMember({"auto", "fig2", "fig3", "semilattice", "equality", "trivial",
                               "oracle"}));

    auto* c_oracle = app.add_subcommand("oracle", "solve with the complete reference search");
    c_oracle->add_option("spec", spec_path)->required();
    c_oracle->add_option("instance", inst_path)->required();
    c_oracle->add_flag("--enumerate", oracle_enumerate, "type-enumeration cross-check mode");

    auto* c_compile = app.add_subcommand("compile", "dump type tables or normal forms");
    c_compile->add_option("spec", spec_path)->required();
    c_compile->add_option("--normal-form", normal_form)
        ->check(CLI::IsMember({"affine", "bijunctive"}));

    app.add_subcommand("dump-clones", "dump all 45 canonical variant tables");

    auto* c_diag = app.add_subcommand("diag", "interdefinability class and closure facts");
    c_diag->add_option("spec", spec_path)->required();

    auto* c_gen = app.add_subcommand("gen", "generate a hardness-reduction problem");
    c_gen->add_option("kind", gen_kind)
        ->required()
        ->check(CLI::IsMember({"one-in-three", "nae", "sum2"}));
    c_gen->add_option("file", gen_file)->required();

    auto* c_types = app.add_subcommand("types", "count the complete k-types");
    c_types->add_option("k", types_k)->required();

    auto* c_reduce = app.add_subcommand("reduce", "dump the Boolean system of an instance");
    c_reduce->add_option("spec", spec_path)->required();
    c_reduce->add_option("instance", inst_path)->required();
    c_reduce->add_option("--mode", mode)->check(CLI::IsMember({"affine", "twosat"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        throw parse_error(e.what());
    }

    if (c_classify->parsed()) {
        LoadedSpec s = load_spec(spec_path, allow_large, &err);
        emit(out, to_json(classify(s.tables, budget)));
        return 0;
    }

    if (c_solve->parsed()) {
        LoadedSpec s = load_spec(spec_path, allow_large, &err);
        Instance inst = load_instance(inst_path);
        Classification cls = classify(s.tables, budget);
        emit(out, to_json(dispatch_solve(s.env, inst, cls, method_of(method_name), cap)));
        return 0;
    }

    if (c_oracle->parsed()) {
        LoadedSpec s = load_spec(spec_path, allow_large);
        Instance inst = load_instance(inst_path);
        OracleOptions opt;
        opt.cap = cap;
        opt.enumerate_mode = oracle_enumerate;
        emit(out, to_json(oracle_solve(s.env, inst, opt)));
        return 0;
    }

    if (c_compile->parsed()) {
        LoadedSpec s = load_spec(spec_path, allow_large);
        json rels = json::object();
        for (auto& d : s.renv.defs) {
            const TypeTable& T = s.env.at(d.name);
            json r;
            r["arity"] = T.arity();
            if (normal_form.empty()) {
                r["types"] = to_json(T)["types"];
            } else if (normal_form == "affine") {
                try {
                    json cs = json::array();
                    for (auto& c : compile_edge_affine(T)) cs.push_back(to_json(c));
                    r["edge_affine"] = true;
                    r["clauses"] = cs;
                } catch (const not_edge_affine_error&) {
                    r["edge_affine"] = false;
                }
            } else {
                try {
                    json cs = json::array();
                    for (auto& c : compile_bijunctive(T)) cs.push_back(to_json(c));
                    r["graph_bijunctive"] = true;
                    r["clauses"] = cs;
                } catch (const not_bijunctive_error&) {
                    r["graph_bijunctive"] = false;
                }
            }
            rels[d.name] = r;
        }
        emit(out, json{{"relations", rels}});
        return 0;
    }

    if (app.get_subcommand("dump-clones")->parsed()) {
        json vs = json::array();
        for (auto& cv : all_clone_variants()) {
            json v = to_json(cv.table);
            v["clone"] = cv.clone_id;
            v["variant"] = cv.variant_index;
            vs.push_back(v);
        }
        emit(out, json{{"variants", vs}});
        return 0;
    }

    if (c_diag->parsed()) {
        LoadedSpec s = load_spec(spec_path, allow_large);
        json rels = json::object();
        for (auto& d : s.renv.defs) {
            const TypeTable& T = s.env.at(d.name);
            json r;
            r["flip_all"] = closed_under(T, ClosureKind::FlipAll);
            r["block_flips"] = closed_under(T, ClosureKind::AllBlockFlips);
            r["cliqueify"] = closed_under(T, ClosureKind::Cliqueify);
            r["anticliqueify"] = closed_under(T, ClosureKind::Anticliqueify);
            r["graph_free"] = closed_under(T, ClosureKind::GraphFree);
            rels[d.name] = r;
        }
        emit(out, json{{"class", interdef_name(interdef_class(s.tables))},
                       {"relations", rels}});
        return 0;
    }

    if (c_gen->parsed()) {
        json in = json::parse(slurp(gen_file));
        BoolFormulaInput f;
        std::string kind = in.value("kind", gen_kind);
        if (kind != gen_kind)
            throw parse_error("input kind '" + kind + "' does not match '" + gen_kind + "'");
        f.kind = gen_kind == "one-in-three" ? BoolFormulaInput::Kind::OneInThree
                 : gen_kind == "nae"        ? BoolFormulaInput::Kind::Nae
                                            : BoolFormulaInput::Kind::Sum2;
        for (auto& v : in.at("variables")) f.variables.push_back(v.get<std::string>());
        for (auto& c : in.at("clauses"))
            f.clauses.push_back(c.get<std::vector<std::string>>());
        GeneratedProblem g = f.kind == BoolFormulaInput::Kind::OneInThree
                                 ? gen_one_in_three(f)
                                 : f.kind == BoolFormulaInput::Kind::Nae ? gen_nae(f)
                                                                         : gen_sum2(f);
        json inst;
        inst["variables"] = g.instance.variables;
        json cons = json::array();
        for (auto& c : g.instance.constraints)
            cons.push_back({{"rel", c.rel}, {"args", c.args}});
        inst["constraints"] = cons;
        emit(out, json{{"spec", g.spec_text}, {"instance", inst}});
        return 0;
    }

    if (c_types->parsed()) {
        if (types_k < 1 || types_k > (allow_large ? kMaxArity : kDefaultArityGuard))
            throw resource_guard_error("arity out of range for types");
        emit(out, json{{"k", types_k}, {"count", count_ktypes(types_k)}});
        return 0;
    }

    if (c_reduce->parsed()) {
        LoadedSpec s = load_spec(spec_path, allow_large);
        Instance inst = load_instance(inst_path);
        BoolMode bm = mode == "twosat" ? BoolMode::Majority : BoolMode::Minority;
        emit(out, reduce_dump(s.env, inst, bm));
        return 0;
    }

    throw parse_error("no subcommand");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const parse_error& e) {
        err << "error: " << e.what();
        if (e.line) err << " (line " << e.line << ", column " << e.col << ")";
        err << "\n";
        return 1;
    } catch (const resource_guard_error& e) {
        err << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const not_edge_affine_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const not_bijunctive_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_inconsistency_error& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gsat::cli
