#include "dsrg.h"

#include <cstring>
#include <string>

#include "dsrg/catalog.hpp"
#include "dsrg/search.hpp"

namespace {

thread_local std::string g_last_error;

template <typename F>
dsrg_status guarded(F&& f) {
    try {
        f();
        return DSRG_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DSRG_ERR_INVALID;
    } catch (...) {
        g_last_error = "unknown internal error";
        return DSRG_ERR_INTERNAL;
    }
}

void require(bool cond, const char* what) {
    if (!cond) dsrg::fail(what);
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void copy_to(char* dst, std::size_t cap, const std::string& src) {
    std::size_t n = std::min(cap - 1, src.size());
    std::memcpy(dst, src.data(), n);
    dst[n] = '\0';
}

dsrg::ParameterSet to_cpp(const dsrg_params& p) {
    return {p.n, p.k, p.t, p.lambda, p.mu};
}

dsrg_params to_c(const dsrg::ParameterSet& p) {
    return {p.n, p.k, p.t, p.lambda, p.mu};
}

dsrg_partition** export_partitions(std::vector<dsrg::Partition>&& parts, size_t* count);

}  // namespace

struct dsrg_graph {
    dsrg::Digraph g;
};

struct dsrg_partition {
    dsrg::Partition p;
};

extern "C" {

const char* dsrg_last_error(void) { return g_last_error.c_str(); }

const char* dsrg_version(void) { return "1.0.0"; }

void dsrg_string_free(char* s) { delete[] s; }

dsrg_status dsrg_graph_from_text(const char* text, dsrg_graph** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new dsrg_graph{dsrg::read_matrix(text)};
    });
}

dsrg_status dsrg_graph_to_text(const dsrg_graph* g, char** out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = dup_string(dsrg::write_matrix(g->g));
    });
}

void dsrg_graph_free(dsrg_graph* g) { delete g; }

int64_t dsrg_graph_order(const dsrg_graph* g) { return g ? g->g.order() : 0; }

dsrg_status dsrg_graph_transpose(const dsrg_graph* g, dsrg_graph** out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = new dsrg_graph{dsrg::transpose(g->g)};
    });
}

dsrg_status dsrg_graph_complement(const dsrg_graph* g, dsrg_graph** out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = new dsrg_graph{dsrg::complement(g->g)};
    });
}

dsrg_status dsrg_classify(const dsrg_graph* g, dsrg_classification* out) {
    return guarded([&] {
        require(g && out, "null argument");
        dsrg::ClassifyResult r = dsrg::classify(g->g);
        out->kind = static_cast<int>(r.kind);
        out->n = r.params.n;
        out->k = r.params.k;
        out->t = r.params.t;
        out->lambda = r.params.lambda;
        out->mu = r.params.mu;
        out->witness_u = r.witness ? r.witness->u + 1 : 0;
        out->witness_v = r.witness ? r.witness->v + 1 : 0;
        copy_to(out->witness, sizeof out->witness,
                r.witness ? r.witness->reason : std::string());
    });
}

dsrg_status dsrg_feasibility_check(const dsrg_params* p, dsrg_feasibility* out) {
    return guarded([&] {
        require(p && out, "null argument");
        dsrg::FeasibilityReport rep = dsrg::feasibility_check(to_cpp(*p));
        out->feasible = rep.feasible;
        out->has_d = rep.d.has_value();
        out->has_s = rep.s.has_value();
        out->d = rep.d.value_or(0);
        out->s = rep.s.value_or(0);
        out->condition_count =
            std::min<int>(DSRG_MAX_CONDITIONS, static_cast<int>(rep.conditions.size()));
        for (int i = 0; i < out->condition_count; ++i) {
            copy_to(out->condition_name[i], sizeof out->condition_name[i],
                    rep.conditions[i].name);
            out->condition_ok[i] = rep.conditions[i].satisfied;
        }
    });
}

dsrg_status dsrg_spectrum_of(const dsrg_params* p, dsrg_spectrum* out) {
    return guarded([&] {
        require(p && out, "null argument");
        dsrg::Spectrum s = dsrg::spectrum(to_cpp(*p));
        *out = {s.theta0, s.theta1, s.theta2, s.m0, s.m1, s.m2};
    });
}

dsrg_status dsrg_complement_params(const dsrg_params* p, dsrg_params* out) {
    return guarded([&] {
        require(p && out, "null argument");
        *out = to_c(dsrg::complement_params(to_cpp(*p)));
    });
}

dsrg_status dsrg_pi_join_params(const dsrg_params* p, int64_t a, int64_t b, int64_t j,
                                dsrg_params* out) {
    return guarded([&] {
        require(p && out, "null argument");
        *out = to_c(dsrg::pi_join_params(to_cpp(*p), a, b, j));
    });
}

dsrg_status dsrg_solve_eq1(const dsrg_params* p, int apply_eq2, dsrg_join_shape* out,
                           size_t cap, size_t* count) {
    return guarded([&] {
        require(p && count, "null argument");
        auto sols = dsrg::solve_eq1(to_cpp(*p), apply_eq2 != 0);
        *count = sols.size();
        for (std::size_t i = 0; out && i < sols.size() && i < cap; ++i)
            out[i] = {sols[i].a, sols[i].b, sols[i].diag, sols[i].offdiag};
    });
}

dsrg_status dsrg_partition_from_text(const char* text, dsrg_partition** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new dsrg_partition{dsrg::parse_partition(text)};
    });
}

dsrg_status dsrg_partition_to_text(const dsrg_partition* p, char** out) {
    return guarded([&] {
        require(p && out, "null argument");
        *out = dup_string(dsrg::format_partition(p->p));
    });
}

void dsrg_partition_free(dsrg_partition* p) { delete p; }

int64_t dsrg_partition_cell_count(const dsrg_partition* p) {
    return p ? p->p.cell_count() : 0;
}

int64_t dsrg_partition_cell_size(const dsrg_partition* p) {
    return p ? p->p.cell_size() : 0;
}

void dsrg_partition_list_free(dsrg_partition** list, size_t count) {
    if (!list) return;
    for (size_t i = 0; i < count; ++i) delete list[i];
    delete[] list;
}

dsrg_status dsrg_measure_quotient(const dsrg_graph* g, const dsrg_partition* p,
                                  int* equitable, int64_t* q, size_t cap,
                                  int64_t* witness_vertex, int64_t* witness_cell) {
    return guarded([&] {
        require(g && p && equitable, "null argument");
        const std::size_t a = static_cast<std::size_t>(p->p.cell_count());
        dsrg::QuotientWitness w;
        auto measured = dsrg::measure_quotient(g->g, p->p, &w);
        if (measured) {
            *equitable = 1;
            require(!q || cap >= a * a, "quotient buffer too small");
            if (q)
                for (std::size_t i = 0; i < a * a; ++i) q[i] = measured->v[i];
        } else {
            *equitable = 0;
            if (witness_vertex) *witness_vertex = w.vertex + 1;
            if (witness_cell) *witness_cell = w.cell + 1;
        }
    });
}

dsrg_status dsrg_is_good_partition(const dsrg_graph* g, const dsrg_partition* p,
                                   int* good) {
    return guarded([&] {
        require(g && p && good, "null argument");
        *good = dsrg::is_good_partition(g->g, p->p) ? 1 : 0;
    });
}

dsrg_status dsrg_build_pi_join(const dsrg_graph* g, const dsrg_partition* p, int64_t j,
                               dsrg_graph** out) {
    return guarded([&] {
        require(g && p && out, "null argument");
        *out = new dsrg_graph{
            dsrg::build_pi_join(g->g, p->p, static_cast<int>(j)).graph};
    });
}

dsrg_status dsrg_find_good_partitions(const dsrg_graph* g, int64_t a, int64_t b,
                                      size_t limit, int jobs, double timeout_s,
                                      dsrg_partition*** out, size_t* count,
                                      int* exhausted) {
    return guarded([&] {
        require(g && out && count, "null argument");
        dsrg::JoinSolution shape = dsrg::resolve_shape(g->g, a, b);
        dsrg::SearchOptions opts;
        opts.limit = limit;
        opts.jobs = jobs;
        if (timeout_s > 0)
            opts.deadline = std::chrono::steady_clock::now() +
                            std::chrono::milliseconds(static_cast<long>(timeout_s * 1000));
        dsrg::SearchResult r = dsrg::find_good_partitions(g->g, shape, opts);
        if (exhausted) *exhausted = r.exhausted;
        *out = export_partitions(std::move(r.partitions), count);
    });
}

dsrg_status dsrg_isomorphic(const dsrg_graph* g1, const dsrg_graph* g2,
                            uint64_t node_budget, int* result, int64_t* mapping) {
    return guarded([&] {
        require(g1 && g2 && result, "null argument");
        dsrg::IsoOptions opts;
        if (node_budget) opts.node_budget = node_budget;
        dsrg::IsoResult r = dsrg::isomorphic(g1->g, g2->g, opts);
        *result = r.status == dsrg::IsoStatus::Found    ? DSRG_ISO_FOUND
                  : r.status == dsrg::IsoStatus::Absent ? DSRG_ISO_ABSENT
                                                        : DSRG_ISO_UNDECIDED;
        if (mapping && r.status == dsrg::IsoStatus::Found)
            for (std::size_t i = 0; i < r.mapping.size(); ++i)
                mapping[i] = r.mapping[i] + 1;
    });
}

dsrg_status dsrg_equivalence(const dsrg_graph* g1, const dsrg_graph* g2,
                             uint64_t node_budget, int* verdict) {
    return guarded([&] {
        require(g1 && g2 && verdict, "null argument");
        dsrg::IsoOptions opts;
        if (node_budget) opts.node_budget = node_budget;
        dsrg::EquivalenceVerdict v = dsrg::equivalence(g1->g, g2->g, opts);
        *verdict = static_cast<int>(v.cls);
    });
}

dsrg_status dsrg_family_graph(const char* id, const int64_t* params, size_t nparams,
                              dsrg_graph** out) {
    return guarded([&] {
        require(id && out, "null argument");
        dsrg::FamilySpec spec = dsrg::parse_family(
            id, std::vector<std::int64_t>(params, params + nparams));
        *out = new dsrg_graph{dsrg::make_graph(spec)};
    });
}

dsrg_status dsrg_family_partitions(const char* id, const int64_t* params,
                                   size_t nparams, int64_t a, int64_t b,
                                   dsrg_partition*** out, size_t* count) {
    return guarded([&] {
        require(id && out && count, "null argument");
        dsrg::FamilySpec spec = dsrg::parse_family(
            id, std::vector<std::int64_t>(params, params + nparams));
        dsrg::Digraph g = dsrg::make_graph(spec);
        dsrg::JoinSolution shape = dsrg::resolve_shape(g, a, b);
        *out = export_partitions(dsrg::known_partitions(spec, shape), count);
    });
}

dsrg_status dsrg_catalog_run(int constructible_only, int jobs, double timeout_s,
                             size_t search_limit, int timing, char** report,
                             int* reproduced) {
    return guarded([&] {
        require(report, "null argument");
        dsrg::CatalogOptions opts;
        opts.constructible_only = constructible_only != 0;
        opts.jobs = jobs;
        if (timeout_s > 0) opts.timeout_s = timeout_s;
        if (search_limit > 0) opts.search_limit = search_limit;
        opts.timing = timing != 0;
        dsrg::CatalogReport rep = dsrg::run_catalog(opts);
        *report = dup_string(rep.text);
        if (reproduced) *reproduced = rep.reproduced;
    });
}

}  // extern "C"

namespace {

dsrg_partition** export_partitions(std::vector<dsrg::Partition>&& parts, size_t* count) {
    *count = parts.size();
    auto** list = new dsrg_partition*[parts.size()];
    for (std::size_t i = 0; i < parts.size(); ++i)
        list[i] = new dsrg_partition{std::move(parts[i])};
    return list;
}

}  // namespace
