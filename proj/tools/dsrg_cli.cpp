// Command line front end for the dsrg shared library. Every subcommand is a
// thin wrapper over the C API; exit codes are 0 for an affirmative verdict,
// 1 for a negative verdict and 2 for usage or input errors.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsrg.h"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitError);
}

void check(dsrg_status st) {
    if (st != DSRG_OK) die(dsrg_last_error());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct GraphHandle {
    dsrg_graph* g = nullptr;
    ~GraphHandle() { dsrg_graph_free(g); }
};

struct PartitionHandle {
    dsrg_partition* p = nullptr;
    ~PartitionHandle() { dsrg_partition_free(p); }
};

void load_graph(const std::string& path, GraphHandle& out) {
    check(dsrg_graph_from_text(slurp(path).c_str(), &out.g));
}

void load_partition(const std::string& path, PartitionHandle& out) {
    check(dsrg_partition_from_text(slurp(path).c_str(), &out.p));
}

std::string params_str(int64_t n, int64_t k, int64_t t, int64_t l, int64_t m) {
    std::ostringstream os;
    os << '(' << n << ',' << k << ',' << t << ',' << l << ',' << m << ')';
    return os.str();
}

std::string classification_str(const dsrg_classification& c) {
    std::ostringstream os;
    switch (c.kind) {
        case DSRG_KIND_DSRG:
            os << "DSRG" << params_str(c.n, c.k, c.t, c.lambda, c.mu);
            break;
        case DSRG_KIND_SRG:
            os << "SRG(" << c.n << ',' << c.k << ',' << c.lambda << ',' << c.mu << ')';
            break;
        case DSRG_KIND_COMPLETE:
            os << "CompleteGraph(" << c.n << ')';
            break;
        default:
            os << "NotStronglyRegular(" << c.witness << " at vertices " << c.witness_u
               << "," << c.witness_v << ")";
    }
    return os.str();
}

const char* equivalence_str(int verdict) {
    switch (verdict) {
        case DSRG_EQUIV_ISOMORPHIC: return "Isomorphic";
        case DSRG_EQUIV_REVERSE: return "ReverseIsomorphic";
        case DSRG_EQUIV_COMPLEMENT: return "ComplementIsomorphic";
        case DSRG_EQUIV_REVERSE_COMPLEMENT: return "ReverseComplementIsomorphic";
        case DSRG_EQUIV_NONEQUIVALENT: return "NonEquivalent";
        default: return "Undecided";
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) die("cannot write '" + out_path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed strongly regular graphs: pi-join construction toolkit"};
    app.require_subcommand(1);

    std::vector<int64_t> p(5);
    std::string graph_path, partition_path, graph_path2, out_path;
    std::string family_id, scope = "constructible";
    std::vector<int64_t> family_params;
    int64_t a = 0, b = 0, j = 1;
    std::size_t limit = 10, catalog_limit = 1;
    int jobs = 1;
    double timeout_s = 0.0, catalog_timeout_s = 60.0;
    uint64_t budget = 10'000'000;
    bool raw = false, timing = false, want_partitions = false;
    std::string format = "text";

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("n", p[0], "order")->required();
        cmd->add_option("k", p[1], "valency")->required();
        cmd->add_option("t", p[2], "digons per vertex")->required();
        cmd->add_option("lambda", p[3], "paths to out-neighbours")->required();
        cmd->add_option("mu", p[4], "paths to non-neighbours")->required();
    };

    auto* feasible = app.add_subcommand("feasible", "check the feasibility conditions");
    add_params(feasible);

    auto* spectrum = app.add_subcommand("spectrum", "integer eigenvalues and multiplicities");
    add_params(spectrum);

    auto* verify = app.add_subcommand("verify", "classify a graph from its matrix file");
    verify->add_option("graph", graph_path, "matrix file")->required();

    auto* equivcmd = app.add_subcommand("equiv", "equivalence class of two (D)SRGs");
    equivcmd->add_option("graph1", graph_path, "matrix file")->required();
    equivcmd->add_option("graph2", graph_path2, "matrix file")->required();
    equivcmd->add_option("--budget", budget, "isomorphism node budget");

    auto* eq1 = app.add_subcommand("eq1", "admissible (a,b) cell shapes");
    add_params(eq1);
    eq1->add_flag("--raw", raw, "keep solutions removed by lambda+b-k >= 0");

    auto* quotient = app.add_subcommand("quotient", "measure the quotient matrix");
    quotient->add_option("graph", graph_path, "matrix file")->required();
    quotient->add_option("partition", partition_path, "partition file")->required();

    auto* checkp = app.add_subcommand("check-partition", "test a partition for goodness");
    checkp->add_option("graph", graph_path, "matrix file")->required();
    checkp->add_option("partition", partition_path, "partition file")->required();

    auto* pijoin = app.add_subcommand("pijoin", "build the pi-join matrix M_j(A)");
    pijoin->add_option("graph", graph_path, "matrix file")->required();
    pijoin->add_option("partition", partition_path, "partition file")->required();
    pijoin->add_option("j", j, "join power")->required();
    pijoin->add_option("-o,--output", out_path, "output matrix file");

    auto* search = app.add_subcommand("search", "find good partitions");
    search->add_option("graph", graph_path, "matrix file")->required();
    search->add_option("a", a, "cell count")->required();
    search->add_option("b", b, "cell size")->required();
    search->add_option("--limit", limit, "maximum partitions to report");
    search->add_option("--jobs", jobs, "worker threads");
    search->add_option("--timeout", timeout_s,
                       "wall clock limit in seconds (0 = none)");

    auto* family = app.add_subcommand("family", "emit a named family graph");
    family->add_option("id", family_id, "family id")->required();
    family->add_option("params", family_params, "family parameters");
    family->add_flag("--partitions", want_partitions, "emit documented partitions");
    family->add_option("-a", a, "cell count for --partitions");
    family->add_option("-b", b, "cell size for --partitions");
    family->add_option("-o,--output", out_path, "output file");

    auto* catalog = app.add_subcommand("catalog", "reproduce the published table");
    catalog->add_option("scope", scope, "constructible | all")
        ->check(CLI::IsMember({"constructible", "all"}));
    catalog->add_option("--jobs", jobs, "worker threads");
    catalog->add_option("--timeout", catalog_timeout_s,
                        "per-row search timeout in seconds");
    catalog->add_option("--limit", catalog_limit, "search cap per row");
    catalog->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text"}));
    catalog->add_flag("--timing", timing, "append timing comments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    dsrg_params params{p[0], p[1], p[2], p[3], p[4]};

    if (feasible->parsed()) {
        dsrg_feasibility rep;
        check(dsrg_feasibility_check(&params, &rep));
        for (int i = 0; i < rep.condition_count; ++i)
            std::cout << (rep.condition_ok[i] ? "ok   " : "FAIL ")
                      << rep.condition_name[i] << "\n";
        if (rep.has_d) std::cout << "d: " << rep.d << "\n";
        if (rep.has_s) std::cout << "s: " << rep.s << "\n";
        std::cout << (rep.feasible ? "feasible" : "infeasible") << "\n";
        return rep.feasible ? kExitYes : kExitNo;
    }

    if (spectrum->parsed()) {
        dsrg_spectrum s;
        check(dsrg_spectrum_of(&params, &s));
        std::cout << "eigenvalues: " << s.theta0 << " " << s.theta1 << " " << s.theta2
                  << "\n";
        std::cout << "multiplicities: " << s.m0 << " " << s.m1 << " " << s.m2 << "\n";
        return kExitYes;
    }

    if (verify->parsed()) {
        GraphHandle g;
        load_graph(graph_path, g);
        dsrg_classification c;
        check(dsrg_classify(g.g, &c));
        std::cout << classification_str(c) << "\n";
        return c.kind == DSRG_KIND_NOT_STRONGLY_REGULAR ? kExitNo : kExitYes;
    }

    if (equivcmd->parsed()) {
        GraphHandle g1, g2;
        load_graph(graph_path, g1);
        load_graph(graph_path2, g2);
        int verdict = 0;
        check(dsrg_equivalence(g1.g, g2.g, budget, &verdict));
        std::cout << equivalence_str(verdict) << "\n";
        return verdict == DSRG_EQUIV_NONEQUIVALENT || verdict == DSRG_EQUIV_UNDECIDED
                   ? kExitNo
                   : kExitYes;
    }

    if (eq1->parsed()) {
        dsrg_join_shape shapes[16];
        size_t count = 0;
        check(dsrg_solve_eq1(&params, raw ? 0 : 1, shapes, 16, &count));
        for (size_t i = 0; i < count && i < 16; ++i)
            std::cout << "(" << shapes[i].a << "," << shapes[i].b << ")\n";
        return count > 0 ? kExitYes : kExitNo;
    }

    if (quotient->parsed()) {
        GraphHandle g;
        PartitionHandle part;
        load_graph(graph_path, g);
        load_partition(partition_path, part);
        int64_t ac = dsrg_partition_cell_count(part.p);
        std::vector<int64_t> q(ac * ac);
        int equitable = 0;
        int64_t wv = 0, wc = 0;
        check(dsrg_measure_quotient(g.g, part.p, &equitable, q.data(), q.size(), &wv,
                                    &wc));
        if (!equitable) {
            std::cout << "not column equitable: vertex " << wv
                      << " disagrees on in-darts from cell " << wc << "\n";
            return kExitNo;
        }
        for (int64_t r = 0; r < ac; ++r) {
            for (int64_t c = 0; c < ac; ++c)
                std::cout << (c ? " " : "") << q[r * ac + c];
            std::cout << "\n";
        }
        return kExitYes;
    }

    if (checkp->parsed()) {
        GraphHandle g;
        PartitionHandle part;
        load_graph(graph_path, g);
        load_partition(partition_path, part);
        int good = 0;
        check(dsrg_is_good_partition(g.g, part.p, &good));
        std::cout << (good ? "good partition" : "not a good partition") << "\n";
        return good ? kExitYes : kExitNo;
    }

    if (pijoin->parsed()) {
        GraphHandle g, joined;
        PartitionHandle part;
        load_graph(graph_path, g);
        load_partition(partition_path, part);
        check(dsrg_build_pi_join(g.g, part.p, j, &joined.g));
        char* text = nullptr;
        check(dsrg_graph_to_text(joined.g, &text));
        emit(text, out_path);
        dsrg_string_free(text);
        return kExitYes;
    }

    if (search->parsed()) {
        GraphHandle g;
        load_graph(graph_path, g);
        dsrg_partition** list = nullptr;
        size_t count = 0;
        int exhausted = 0;
        check(dsrg_find_good_partitions(g.g, a, b, limit, jobs, timeout_s, &list,
                                        &count, &exhausted));
        std::ostringstream os;
        if (count > 0) {
            int64_t ac = dsrg_partition_cell_count(list[0]);
            std::vector<int64_t> q(ac * ac);
            int equitable = 0;
            check(dsrg_measure_quotient(g.g, list[0], &equitable, q.data(), q.size(),
                                        nullptr, nullptr));
            os << "# quotient matrix:\n";
            for (int64_t r = 0; r < ac; ++r) {
                os << "#";
                for (int64_t c = 0; c < ac; ++c) os << " " << q[r * ac + c];
                os << "\n";
            }
        }
        os << "# exhausted: " << (exhausted ? "yes" : "no") << "\n";
        for (size_t i = 0; i < count; ++i) {
            char* text = nullptr;
            check(dsrg_partition_to_text(list[i], &text));
            os << text << "\n";
            dsrg_string_free(text);
        }
        dsrg_partition_list_free(list, count);
        std::cout << os.str();
        return count > 0 ? kExitYes : kExitNo;
    }

    if (family->parsed()) {
        if (want_partitions) {
            dsrg_partition** list = nullptr;
            size_t count = 0;
            check(dsrg_family_partitions(family_id.c_str(), family_params.data(),
                                         family_params.size(), a, b, &list, &count));
            std::ostringstream os;
            for (size_t i = 0; i < count; ++i) {
                char* text = nullptr;
                check(dsrg_partition_to_text(list[i], &text));
                os << text << "\n";
                dsrg_string_free(text);
            }
            dsrg_partition_list_free(list, count);
            emit(os.str(), out_path);
            return count > 0 ? kExitYes : kExitNo;
        }
        GraphHandle g;
        check(dsrg_family_graph(family_id.c_str(), family_params.data(),
                                family_params.size(), &g.g));
        char* text = nullptr;
        check(dsrg_graph_to_text(g.g, &text));
        emit(text, out_path);
        dsrg_string_free(text);
        return kExitYes;
    }

    if (catalog->parsed()) {
        char* report = nullptr;
        int reproduced = 0;
        check(dsrg_catalog_run(scope == "constructible" ? 1 : 0, jobs,
                               catalog_timeout_s, catalog_limit, timing ? 1 : 0,
                               &report, &reproduced));
        std::cout << report;
        dsrg_string_free(report);
        return kExitYes;
    }

    return kExitError;
}
