// Command-line front end.  Every subcommand is deterministic: identical
// inputs produce byte-identical stdout.  --json swaps the text report for a
// versioned JSON object.  Exit codes: 0 success or positive verdict, 1
// negative verdict, 2 guarded or inconclusive, 64 usage or input error.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cb/bounds.hpp"
#include "cb/code.hpp"
#include "cb/concat.hpp"
#include "cb/construct.hpp"
#include "cb/error.hpp"
#include "cb/geometry.hpp"
#include "cb/minimal.hpp"
#include "cb/repro.hpp"

namespace {

using cb::Certificate;
using cb::Field;
using cb::FieldPtr;
using cb::LinearCode;
using cb::ProjectiveSystem;
using ojson = nlohmann::ordered_json;

FieldPtr field_from_token(const std::string& tok) {
    std::size_t caret = tok.find('^');
    if (caret == std::string::npos) return Field::of_order(std::stoull(tok));
    return Field::get(std::stoull(tok.substr(0, caret)),
                      static_cast<unsigned>(std::stoul(tok.substr(caret + 1))));
}

bool has_pts_extension(const std::string& path) {
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".pts") == 0;
}

LinearCode load_code(const std::string& path) {
    if (has_pts_extension(path)) return cb::code_from_system(cb::read_pts_file(path));
    return cb::read_gmat_file(path);
}

ProjectiveSystem load_system(const std::string& path) {
    if (has_pts_extension(path)) return cb::read_pts_file(path);
    return cb::system_from_code(cb::read_gmat_file(path));
}

// q^k, saturating at cap + 1 instead of overflowing.
std::uint64_t message_count_capped(const LinearCode& c, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k(); ++i) {
        if (total > cap / c.field()->order()) return cap + 1;
        total *= c.field()->order();
    }
    return total;
}

constexpr std::uint64_t kInfoEnumLimit = std::uint64_t(1) << 24;

ojson code_json(const LinearCode& c) {
    ojson j;
    j["schema"] = 1;
    j["p"] = c.field()->characteristic();
    j["m"] = c.field()->degree();
    j["q"] = c.field()->order();
    j["n"] = c.n();
    j["k"] = c.k();
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < c.k(); ++r) {
        ojson row = ojson::array();
        for (std::size_t col = 0; col < c.n(); ++col) row.push_back(c.gen().at(r, col));
        rows.push_back(std::move(row));
    }
    j["gen"] = std::move(rows);
    return j;
}

ojson cert_json(const Certificate& c) {
    ojson j;
    j["verdict"] = cb::verdict_name(c.verdict);
    j["method"] = cb::method_name(c.method);
    j["detail"] = c.detail;
    if (c.witness) {
        ojson w;
        w["container_msg"] = c.witness->container_msg;
        w["contained_msg"] = c.witness->contained_msg;
        w["container"] = c.witness->container;
        w["contained"] = c.witness->contained;
        j["witness"] = std::move(w);
    }
    return j;
}

void print_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

void print_certificate(const Certificate& c) {
    std::cout << "verdict: " << cb::verdict_name(c.verdict) << "\n";
    std::cout << "method: " << cb::method_name(c.method) << "\n";
    if (!c.detail.empty()) std::cout << "detail: " << c.detail << "\n";
    if (c.witness) {
        std::cout << "container message: " << c.witness->container_msg << "\n";
        std::cout << "contained message: " << c.witness->contained_msg << "\n";
    }
}

int emit_code(const LinearCode& c, const std::string& out, bool json,
              const ojson& extra = ojson::object()) {
    if (!out.empty()) cb::write_gmat_file(c, out);
    if (json) {
        ojson j = code_json(c);
        for (const auto& [key, val] : extra.items()) j[key] = val;
        print_json(j);
    } else if (out.empty()) {
        std::cout << cb::write_gmat(c);
    }
    return 0;
}

// Scalar report: "name = value" lines, or one flat JSON object.
int emit_kv(const std::vector<std::pair<std::string, ojson>>& kv, bool json) {
    if (json) {
        ojson j;
        j["schema"] = 1;
        for (const auto& [key, val] : kv) j[key] = val;
        print_json(j);
    } else {
        for (const auto& [key, val] : kv) {
            if (val.is_string())
                std::cout << key << " = " << val.get<std::string>() << "\n";
            else
                std::cout << key << " = " << val.dump() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concatenated linear codes, minimality checks and strong blocking sets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "concat-blocking 1.0.0");

    bool json = false;
    unsigned workers = 1;
    if (const char* env = std::getenv("CONCAT_BLOCKING_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 64) workers = static_cast<unsigned>(v);
    }
    int rc = 0;

    auto add_json = [&](CLI::App* s) { s->add_flag("--json", json, "emit a JSON object"); };

    // ---- construct ---------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build generator matrices");
    construct->require_subcommand(1);
    std::string out_path;

    std::string sx_field;
    std::size_t sx_k = 2;
    auto* sx = construct->add_subcommand("simplex", "simplex code, one column per point");
    sx->add_option("--field", sx_field, "field as p^m or as its order")->required();
    sx->add_option("-k,--dim", sx_k, "dimension")->required();
    sx->add_option("-o,--output", out_path, "write the .gmat here instead of stdout");
    add_json(sx);
    sx->callback(
        [&] { rc = emit_code(cb::simplex(field_from_token(sx_field), sx_k), out_path, json); });

    std::string rs_field;
    std::size_t rs_n = 0, rs_k = 0;
    auto* rs = construct->add_subcommand("grs", "(extended) Reed-Solomon code, MDS");
    rs->add_option("--field", rs_field, "field as p^m or as its order")->required();
    rs->add_option("-n,--length", rs_n, "length, at most q+1")->required();
    rs->add_option("-k,--dim", rs_k, "dimension")->required();
    rs->add_option("-o,--output", out_path, "write the .gmat here instead of stdout");
    add_json(rs);
    rs->callback(
        [&] { rc = emit_code(cb::grs(field_from_token(rs_field), rs_n, rs_k), out_path, json); });

    std::string mo_field;
    std::uint64_t mo_base = 2;
    std::size_t mo_K = 2;
    auto* mo = construct->add_subcommand(
        "mds-outer", "longest MDS outer code certified against a base alphabet");
    mo->add_option("--field", mo_field, "extension field GF(q^k), as p^m or order")->required();
    mo->add_option("--base", mo_base, "base alphabet size q")->required();
    mo->add_option("-K,--dim", mo_K, "outer dimension")->required();
    mo->add_option("-o,--output", out_path, "write the .gmat here instead of stdout");
    add_json(mo);
    mo->callback([&] {
        rc = emit_code(cb::mds_outer(field_from_token(mo_field), mo_base, mo_K), out_path, json);
    });

    std::string fx_name, fx_field;
    std::uint64_t fx_i = 1, fx_j = 2;
    auto* fx = construct->add_subcommand("fixture", "bundled reference matrices");
    fx->add_option("name", fx_name, "tern935 | bin1566 | mds423")->required();
    fx->add_option("--field", fx_field, "extension field, mds423 only");
    fx->add_option("--i", fx_i, "first generator exponent, mds423 only");
    fx->add_option("--j", fx_j, "second generator exponent, mds423 only");
    fx->add_option("-o,--output", out_path, "write the .gmat here instead of stdout");
    add_json(fx);
    fx->callback([&] {
        if (fx_name == "tern935") {
            rc = emit_code(cb::fixture_ternary_935(), out_path, json);
        } else if (fx_name == "bin1566") {
            rc = emit_code(cb::fixture_binary_1566(), out_path, json);
        } else if (fx_name == "mds423") {
            if (fx_field.empty())
                cb::fail(cb::Error::Kind::BadParams, "fixture mds423 needs --field");
            rc = emit_code(cb::fixture_mds_outer_423(field_from_token(fx_field), fx_i, fx_j),
                           out_path, json);
        } else {
            cb::fail(cb::Error::Kind::BadParams, "unknown fixture: " + fx_name);
        }
    });

    std::uint64_t se_q = 2;
    std::size_t se_k = 2, se_nmax = 0;
    bool se_allow = false;
    auto* se = construct->add_subcommand("search",
                                         "shortest minimal code by exhaustive point search");
    se->add_option("-q,--order", se_q, "field order")->required();
    se->add_option("-k,--dim", se_k, "dimension")->required();
    se->add_option("--n-max", se_nmax, "length cap (default: the upper bound formula)");
    se->add_flag("--allow-large", se_allow, "lift the q in {2,3}, k <= 4 guard");
    se->add_option("-o,--output", out_path, "write the .gmat here instead of stdout");
    add_json(se);
    se->callback([&] {
        std::size_t cap = se_nmax ? se_nmax : cb::sbs_upper_bound(se_k, se_q);
        cb::SearchResult res = cb::search_shortest_minimal(se_q, se_k, cap, se_allow);
        ojson extra;
        extra["n_min"] = res.n_min;
        rc = emit_code(res.witness, out_path, json, extra);
    });

    // ---- concat ------------------------------------------------------------
    std::string cc_outer, cc_inner, cc_out;
    bool cc_certify = false, cc_mds = false;
    auto* cc = app.add_subcommand("concat", "concatenate an outer and an inner code");
    cc->add_option("--outer", cc_outer, "outer .gmat over GF(q^k)")->required();
    cc->add_option("--inner", cc_inner, "inner [n, k] .gmat over GF(q)")->required();
    cc->add_option("-o,--output", cc_out, "write the concatenated .gmat here");
    cc->add_flag("--certify", cc_certify,
                 "report the minimality certificate instead of the matrix");
    cc->add_flag("--mds", cc_mds, "trust the outer code to be MDS when certifying");
    add_json(cc);
    cc->callback([&] {
        cb::ConcatSpec spec{load_code(cc_outer), load_code(cc_inner)};
        LinearCode result = cb::concatenate(spec);
        if (!cc_out.empty()) cb::write_gmat_file(result, cc_out);
        std::optional<Certificate> cert;
        if (cc_certify) cert = cb::certify_minimal_concat(spec, cc_mds);
        if (json) {
            ojson j = code_json(result);
            if (cert) j["certificate"] = cert_json(*cert);
            print_json(j);
        } else if (cert) {
            print_certificate(*cert);
        } else if (cc_out.empty()) {
            std::cout << cb::write_gmat(result);
        }
        if (cert && !cert->positive()) rc = 2;
    });

    // ---- check -------------------------------------------------------------
    auto* check = app.add_subcommand("check", "verify code and point-set properties");
    check->require_subcommand(1);

    std::string ck_min_file;
    auto* ck_min = check->add_subcommand("minimal", "exhaustive minimality check");
    ck_min->add_option("file", ck_min_file, ".gmat or .pts")->required();
    add_json(ck_min);
    ck_min->callback([&] {
        LinearCode c = load_code(ck_min_file);
        std::uint64_t count = message_count_capped(c, cb::kPairLimit);
        if (count > cb::kPairWarn && count <= cb::kPairLimit)
            std::cerr << "warning: " << count
                      << " messages; the quadratic support scan may take a while\n";
        Certificate v = cb::is_minimal_code(c, workers);
        if (json) {
            ojson j;
            j["schema"] = 1;
            j["n"] = c.n();
            j["k"] = c.k();
            j["q"] = c.field()->order();
            j["minimal"] = v.positive();
            j["certificate"] = cert_json(v);
            print_json(j);
        } else {
            print_certificate(v);
        }
        rc = v.positive() ? 0 : 1;
    });

    std::string ck_ab_file;
    auto* ck_ab = check->add_subcommand("ab", "sufficient weight-spread minimality test");
    ck_ab->add_option("file", ck_ab_file, ".gmat or .pts")->required();
    add_json(ck_ab);
    ck_ab->callback([&] {
        LinearCode c = load_code(ck_ab_file);
        Certificate v = cb::ab_condition(c);
        if (json) {
            ojson j;
            j["schema"] = 1;
            j["certified"] = v.positive();
            j["certificate"] = cert_json(v);
            print_json(j);
        } else {
            print_certificate(v);
        }
        rc = v.positive() ? 0 : 2;
    });

    std::string ck_sbs_file;
    auto* ck_sbs = check->add_subcommand("sbs", "exact strong blocking set check");
    ck_sbs->add_option("file", ck_sbs_file, ".pts or .gmat")->required();
    add_json(ck_sbs);
    ck_sbs->callback([&] {
        ProjectiveSystem s = load_system(ck_sbs_file);
        cb::BlockingCheck b = cb::is_strong_blocking(s);
        if (json) {
            ojson j;
            j["schema"] = 1;
            j["points"] = s.size();
            j["k"] = s.k;
            j["q"] = s.field->order();
            j["strong_blocking"] = b.strong;
            if (b.failing_hyperplane) j["failing_hyperplane"] = b.failing_hyperplane->coords;
            print_json(j);
        } else {
            std::cout << "strong blocking: " << (b.strong ? "yes" : "no") << "\n";
            if (b.failing_hyperplane) {
                std::cout << "failing hyperplane normal:";
                for (cb::gf_elem x : b.failing_hyperplane->coords) std::cout << " " << x;
                std::cout << "\n";
            }
        }
        rc = b.strong ? 0 : 1;
    });

    std::string ck_sat_file, ck_sat_ambient;
    auto* ck_sat = check->add_subcommand("saturating", "saturation radius of a point set");
    ck_sat->add_option("file", ck_sat_file, ".pts or .gmat")->required();
    ck_sat->add_option("--ambient", ck_sat_ambient,
                       "measure inside PG(k-1, Q) for this extension field (p^m or order)");
    add_json(ck_sat);
    ck_sat->callback([&] {
        ProjectiveSystem s = load_system(ck_sat_file);
        if (!ck_sat_ambient.empty()) {
            FieldPtr big = field_from_token(ck_sat_ambient);
            std::uint64_t q = s.field->order(), acc = 1;
            unsigned e = 0;
            while (acc < big->order() && e < 64) {
                acc *= q;
                ++e;
            }
            if (e == 0 || acc != big->order())
                cb::fail(cb::Error::Kind::FieldMismatch,
                         "--ambient must be an extension of the set's field");
            s = cb::subgeometry_embed(s, e);
        }
        std::size_t rho = cb::saturation_radius(s);
        if (json) {
            ojson j;
            j["schema"] = 1;
            j["points"] = s.size();
            j["k"] = s.k;
            j["q"] = s.field->order();
            j["saturation_radius"] = rho;
            print_json(j);
        } else {
            std::cout << "saturation radius = " << rho << "\n";
        }
    });

    // ---- profile -----------------------------------------------------------
    std::string pf_file;
    auto* pf = app.add_subcommand("profile", "extremal hyperplane section sizes");
    pf->add_option("file", pf_file, ".pts or .gmat")->required();
    add_json(pf);
    pf->callback([&] {
        ProjectiveSystem s = load_system(pf_file);
        cb::HyperplaneProfile h = cb::hyperplane_profile(s);
        rc = emit_kv({{"points", s.size()},
                      {"k", s.k},
                      {"q", s.field->order()},
                      {"min_hits", h.min_hits},
                      {"max_hits", h.max_hits},
                      {"certified_strong_blocking", h.certified_strong_blocking}},
                     json);
    });

    // ---- info --------------------------------------------------------------
    std::string in_file;
    auto* in = app.add_subcommand("info", "parameters of a stored code");
    in->add_option("file", in_file, ".gmat or .pts")->required();
    add_json(in);
    in->callback([&] {
        LinearCode c = load_code(in_file);
        auto [projective, nondegenerate] = cb::degeneracy_flags(c);
        std::vector<std::pair<std::string, ojson>> kv = {
            {"p", c.field()->characteristic()}, {"m", c.field()->degree()},
            {"q", c.field()->order()},          {"n", c.n()},
            {"k", c.k()},                       {"projective", projective},
            {"nondegenerate", nondegenerate}};
        if (message_count_capped(c, kInfoEnumLimit) <= kInfoEnumLimit) {
            kv.emplace_back("d", c.min_distance());
            kv.emplace_back("max_weight", c.max_weight());
            const cb::WeightDistribution& wd = c.weights();
            ojson dist;
            for (std::size_t w = 0; w < wd.counts.size(); ++w)
                if (wd.counts[w]) dist[std::to_string(w)] = wd.counts[w];
            kv.emplace_back("weight_distribution", std::move(dist));
        }
        rc = emit_kv(kv, json);
    });

    // ---- bounds ------------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "closed-form size and rate formulas");
    bounds->require_subcommand(1);

    std::size_t bd_k = 2;
    std::uint64_t bd_q = 2;
    auto* bd_sbs = bounds->add_subcommand("sbs", "strong blocking set size bounds");
    bd_sbs->add_option("-k,--dim", bd_k, "dimension")->required();
    bd_sbs->add_option("-q,--order", bd_q, "field order")->required();
    add_json(bd_sbs);
    bd_sbs->callback([&] {
        rc = emit_kv({{"k", bd_k},
                      {"q", bd_q},
                      {"lower", cb::sbs_lower_bound(bd_k, bd_q)},
                      {"upper", cb::sbs_upper_bound(bd_k, bd_q)}},
                     json);
    });

    std::uint64_t gv_q = 2;
    double gv_delta = 0.0;
    auto* bd_gv = bounds->add_subcommand("gv", "q-ary entropy and Gilbert-Varshamov rate");
    bd_gv->add_option("-q,--order", gv_q, "alphabet size")->required();
    bd_gv->add_option("--delta", gv_delta, "relative distance in [0, 1]")->required();
    add_json(bd_gv);
    bd_gv->callback([&] {
        rc = emit_kv({{"q", gv_q},
                      {"delta", gv_delta},
                      {"entropy", cb::q_entropy(gv_q, gv_delta)},
                      {"rate", cb::gv_rate(gv_q, gv_delta)}},
                     json);
    });

    std::uint64_t tw_q0 = 2, tw_h = 2, tw_n = 1;
    auto* bd_tw = bounds->add_subcommand("tower", "recursive tower family parameters");
    bd_tw->set_help_flag("--help", "print help");  // frees -h for the step option
    bd_tw->add_option("--q0", tw_q0, "base field order")->required();
    bd_tw->add_option("--h", tw_h, "extension step, at least 2")->required();
    bd_tw->add_option("-n,--level", tw_n, "tower level")->required();
    add_json(bd_tw);
    bd_tw->callback([&] {
        cb::TowerParams t = cb::tower_params(tw_q0, tw_h, tw_n);
        std::vector<std::pair<std::string, ojson>> kv = {{"N", t.N},
                                                         {"lambda", t.lambda},
                                                         {"n_n", t.n_n},
                                                         {"m_n", t.m_n},
                                                         {"k_n", t.k_n},
                                                         {"concat_len", t.concat_len},
                                                         {"concat_dim", t.concat_dim},
                                                         {"concat_dist_lb", t.concat_dist_lb},
                                                         {"example_len", t.example_len},
                                                         {"example_dim", t.example_dim},
                                                         {"example_dist_lb", t.example_dist_lb}};
        if (t.K_n) kv.emplace_back("K_n", *t.K_n);
        rc = emit_kv(kv, json);
    });

    std::size_t st_k = 3, st_rho = 1;
    std::uint64_t st_q = 2;
    auto* bd_st = bounds->add_subcommand("saturating", "saturating set size bounds");
    bd_st->add_option("-k,--dim", st_k, "dimension")->required();
    bd_st->add_option("-q,--order", st_q, "base field order")->required();
    bd_st->add_option("--rho", st_rho, "saturation radius")->required();
    add_json(bd_st);
    bd_st->callback([&] {
        cb::SaturatingBounds b = cb::saturating_bounds(st_k, st_q, st_rho);
        std::vector<std::pair<std::string, ojson>> kv = {
            {"k", st_k}, {"q", st_q}, {"rho", st_rho}, {"lower", b.lower}, {"upper", b.upper}};
        if (st_rho == st_k - 2) kv.emplace_back("rho_eq_k_minus_2_upper", b.rho_eq_k_minus_2_upper);
        rc = emit_kv(kv, json);
    });

    std::uint64_t mdp_q = 2, mdp_K = 2;
    auto* bd_md = bounds->add_subcommand("mds-outer", "longest certified MDS outer parameters");
    bd_md->add_option("-q,--order", mdp_q, "base alphabet size")->required();
    bd_md->add_option("-K,--dim", mdp_K, "outer dimension")->required();
    add_json(bd_md);
    bd_md->callback([&] {
        auto [N, D] = cb::mds_outer_params(mdp_q, mdp_K);
        rc = emit_kv({{"q", mdp_q}, {"K", mdp_K}, {"N", N}, {"D", D}}, json);
    });

    std::uint64_t rt_q0 = 2;
    auto* bd_rt = bounds->add_subcommand("rt4", "two-weight quadric code parameters");
    bd_rt->add_option("--q0", rt_q0, "base field order")->required();
    add_json(bd_rt);
    bd_rt->callback([&] {
        cb::Rt4Params r = cb::rt4_params(rt_q0);
        rc = emit_kv({{"n", r.n}, {"dim", r.dim}, {"d", r.d}, {"w", r.w}, {"ratio", r.ratio}},
                     json);
    });

    std::uint64_t ep_q0 = 2, ep_h = 2, ep_dt = 1;
    double ep_eps = -1.0;
    auto* bd_ep = bounds->add_subcommand("eps", "admissible defect for the asymptotic family");
    bd_ep->set_help_flag("--help", "print help");  // frees -h for the step option
    bd_ep->add_option("--q0", ep_q0, "base field order")->required();
    bd_ep->add_option("--h", ep_h, "extension step")->required();
    bd_ep->add_option("--dtilde", ep_dt, "outer two-weight code minimum distance")->required();
    bd_ep->add_option("--eps", ep_eps, "defect to test against the threshold");
    add_json(bd_ep);
    bd_ep->callback([&] {
        double thr = cb::rate_epsilon_threshold(ep_q0, ep_h, ep_dt);
        std::vector<std::pair<std::string, ojson>> kv = {{"threshold", thr}};
        if (ep_eps >= 0.0) kv.emplace_back("admissible", ep_eps < thr);
        rc = emit_kv(kv, json);
        if (ep_eps >= 0.0 && !(ep_eps < thr)) rc = 1;
    });

    // ---- reproduce ---------------------------------------------------------
    int rp_table = 1, rp_row = 0;
    std::string rp_codes;
    auto* rp = app.add_subcommand("reproduce", "rebuild the bundled reference tables");
    rp->add_option("--table", rp_table, "table 1 or 2")->check(CLI::Range(1, 2));
    rp->add_option("--row", rp_row, "single row id");
    rp->add_option("--codes", rp_codes, "directory of external n_k_d_qq.gmat files");
    add_json(rp);
    rp->callback([&] {
        cb::ReproOptions opt;
        opt.table = rp_table;
        if (rp_row) opt.only_row = rp_row;
        if (!rp_codes.empty()) opt.codes_dir = rp_codes;
        opt.workers = workers;
        std::vector<cb::RowResult> rows = cb::reproduce(opt);
        int passed = 0, failed = 0, skipped = 0;
        for (const cb::RowResult& r : rows) {
            if (r.status == "PASS") ++passed;
            else if (r.status == "FAIL") ++failed;
            else ++skipped;
        }
        if (json) {
            ojson j;
            j["schema"] = 1;
            j["table"] = rp_table;
            ojson arr = ojson::array();
            for (const cb::RowResult& r : rows) {
                ojson e;
                e["id"] = r.spec.id;
                e["status"] = r.status;
                e["outer"] = r.outer_desc.empty() ? r.spec.outer : r.outer_desc;
                e["inner"] = r.inner_desc.empty() ? r.spec.inner : r.inner_desc;
                e["expected"] = {{"n", r.spec.exp_n},
                                 {"k", r.spec.exp_k},
                                 {"d", r.spec.exp_d},
                                 {"q", r.spec.exp_q}};
                if (r.got_n) e["built"] = {{"n", r.got_n}, {"k", r.got_k}, {"d", r.got_d}};
                e["minimality"] = r.minimality;
                e["range"] = r.spec.range;
                e["note"] = r.note;
                arr.push_back(std::move(e));
            }
            j["rows"] = std::move(arr);
            j["passed"] = passed;
            j["failed"] = failed;
            j["skipped"] = skipped;
            print_json(j);
        } else {
            for (const cb::RowResult& r : rows) {
                std::string outer = r.outer_desc.empty() ? r.spec.outer : r.outer_desc;
                std::string inner = r.inner_desc.empty() ? r.spec.inner : r.inner_desc;
                std::printf("T%d R%02d %-7s %s x %s", r.spec.table, r.spec.id, r.status.c_str(),
                            outer.c_str(), inner.c_str());
                if (r.got_n)
                    std::printf(" -> [%zu,%zu,%zu]q%llu", r.got_n, r.got_k, r.got_d,
                                static_cast<unsigned long long>(r.spec.exp_q));
                if (!r.minimality.empty()) std::printf("  minimal: %s", r.minimality.c_str());
                if (!r.note.empty()) std::printf("  (%s)", r.note.c_str());
                std::printf("\n");
            }
            std::printf("rows: %d passed, %d failed, %d skipped\n", passed, failed, skipped);
        }
        rc = failed ? 1 : 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    } catch (const cb::Error& e) {
        std::cerr << "error: " << cb::Error::kind_name(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == cb::Error::Kind::TooLarge ? 2 : 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
    return rc;
}
