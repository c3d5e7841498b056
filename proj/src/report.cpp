#include "stabrep/report.hpp"

#include "stabrep/bounds.hpp"
#include "stabrep/canonical.hpp"
#include "stabrep/chartab.hpp"
#include "stabrep/errors.hpp"
#include "stabrep/finrep.hpp"
#include "stabrep/modgroup.hpp"

#include <algorithm>
#include <sstream>

namespace stabrep {

namespace {

Json partition_json(const Partition& p)
{
    Json a = Json::array();
    for (int x : p.parts())
        a.push_back(x);
    return a;
}

Json bipartition_json(const Bipartition& b)
{
    return Json::array({partition_json(b.plus), partition_json(b.minus)});
}

Partition partition_from(const Json& j)
{
    std::vector<int> parts;
    for (const auto& x : j)
        parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

Json qmatrix_json(const QMatrix& m)
{
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Rat rat_from(const Json& v)
{
    if (v.is_number_integer())
        return Rat(static_cast<long>(v.get<long long>()));
    return parse_rat(v.get<std::string>());
}

QMatrix qmatrix_from(const Json& j)
{
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : j) {
        std::vector<Rat> row;
        for (const auto& v : r)
            row.push_back(rat_from(v));
        rows.push_back(std::move(row));
    }
    return QMatrix::from_rows(rows);
}

std::string gen_key(int i, int j)
{
    return "E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

} // namespace

Json config_json(const Config& cfg)
{
    Json j;
    j["group_order_cap"] = cfg.group_order_cap;
    j["cyclotomic_cap"] = cfg.cyclotomic_cap;
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["window"] = Json::array({cfg.window_lo, cfg.window_hi});
    j["closure_dim_budget"] = cfg.closure_dim_budget;
    return j;
}

Json envelope(const std::string& command, const Config& cfg)
{
    Json j;
    j["tool"] = "stabrep";
    j["version"] = kVersion;
    j["command"] = command;
    j["config"] = config_json(cfg);
    return j;
}

Json branch_report(const Bipartition& b, int rank, bool pieri, int lr_m, const Config& cfg)
{
    Json j = envelope(pieri ? "branch/pieri" : "branch/lr", cfg);
    j["label"] = bipartition_json(b);
    j["rank"] = rank;
    Json items = Json::array();
    Int total(0);
    if (pieri) {
        for (const auto& br : pieri_restrict({b, rank})) {
            Json it;
            it["label"] = bipartition_json(br.label.bipartition);
            it["rank"] = br.label.rank;
            it["torus_exponent"] = br.torus_exponent;
            it["multiplicity"] = br.multiplicity;
            Int d = weyl_dimension(br.label);
            it["dimension"] = d.get_str();
            total += d * br.multiplicity;
            items.push_back(std::move(it));
        }
    } else {
        for (const auto& t : lr_restrict({b, rank}, lr_m)) {
            Json it;
            it["left"] = bipartition_json(t.left.bipartition);
            it["left_rank"] = t.left.rank;
            it["right"] = bipartition_json(t.right.bipartition);
            it["right_rank"] = t.right.rank;
            it["multiplicity"] = t.multiplicity;
            Int d = weyl_dimension(t.left) * weyl_dimension(t.right) * Int(t.multiplicity);
            it["dimension"] = d.get_str();
            total += d;
            items.push_back(std::move(it));
        }
        j["m"] = lr_m;
    }
    j["branches"] = std::move(items);
    j["total_dimension"] = total.get_str();
    j["input_dimension"] = weyl_dimension({b, rank}).get_str();
    j["dimension_conserved"] = (total == weyl_dimension({b, rank}));
    return j;
}

Json dim_report(const Bipartition& b, int rank, const Config& cfg)
{
    Json j = envelope("dim", cfg);
    j["label"] = bipartition_json(b);
    j["rank"] = rank;
    j["dimension"] = weyl_dimension({b, rank}).get_str();
    j["dimension_polynomial"] = dimension_polynomial(b).str("n");
    return j;
}

Json bounds_report(int n, const Int* dim, const long* ell, const long* p, const int* k,
                   const Config& cfg)
{
    Json j = envelope("bounds", cfg);
    j["n"] = n;
    if (ell) {
        auto b = depth_dim_lower_bound(*ell, n);
        j["ell"] = *ell;
        j["depth_dim_lower_bound"] = rat_str(b.bound);
        j["weak_floor"] = b.weak_floor.get_str();
    }
    if (p && k) {
        j["p"] = *p;
        j["k"] = *k;
        j["prime_power_lower_bound"] = rat_str(bmk_lower_bound(n, *p, *k));
    }
    if (dim) {
        j["dim"] = dim->get_str();
        Int threshold = int_pow(Int(2), n) - 2;
        j["low_dim_threshold"] = threshold.get_str();
        if (n >= 5 && *dim < threshold)
            j["verdict"] = "below 2^n - 2: algebraic forced";
        else
            j["verdict"] = "no algebraicity conclusion from the dimension alone";
        j["max_depth_for_dim"] = max_depth_for_dim(*dim, n);
    }
    return j;
}

Json group_table_report(int n, long ell, const std::string& variant, const Config& cfg)
{
    Json j = envelope("group-table", cfg);
    Variant v = variant_from_name(variant);
    auto g = FiniteMatrixGroup::enumerate(n, ell, v, cfg.group_order_cap);
    j["n"] = n;
    j["ell"] = ell;
    j["variant"] = variant_name(v);
    j["order"] = static_cast<long long>(g.size());
    j["class_count"] = static_cast<long long>(g.class_count());
    j["exponent"] = g.exponent();
    auto tab = CharacterTable::compute(g, cfg.seed);
    j["dixon_prime"] = tab.dixon_prime();
    Json irreps = Json::array();
    Int sq(0);
    for (size_t i = 0; i < tab.irrep_count(); ++i) {
        Json it;
        it["id"] = tab.irrep_id(i);
        it["dimension"] = tab.degree(i);
        it["factoring_level"] = tab.factoring_level(i);
        it["elementary_depth"] = tab.depth_from_elementary(i);
        irreps.push_back(std::move(it));
        sq += Int(tab.degree(i)) * Int(tab.degree(i));
    }
    j["irreducibles"] = std::move(irreps);
    j["sum_of_squares_matches_order"] = (sq == Int(static_cast<unsigned long>(g.size())));
    return j;
}

Json depth_report(const IntegralRep& rep, long gamma_u_ell, const Config& cfg)
{
    Json j = envelope("depth", cfg);
    j["n"] = rep.rank();
    j["dimension"] = rep.dim();
    DepthReport r = classify(rep, false, cfg.cyclotomic_cap);
    j["depth"] = r.depth;
    Json pd;
    for (auto [p, k] : r.p_depths)
        pd[std::to_string(p)] = k;
    j["p_depths"] = std::move(pd);
    Json orders = Json::array();
    for (auto [d, m] : r.eigenvalue_orders)
        orders.push_back(Json::array({d, m}));
    j["elementary_eigenvalue_orders"] = std::move(orders);
    j["classification"] = depth_class_name(r.classification);
    j["dim_fin"] = r.dim_fin;
    if (r.dim_alg_exact)
        j["dim_alg"] = r.dim_alg;
    if (gamma_u_ell > 0) {
        auto verdict = gamma_u_check(rep, gamma_u_ell, cfg.samples, cfg.seed);
        Json g;
        g["ell"] = gamma_u_ell;
        g["samples"] = verdict.samples;
        g["pass"] = verdict.pass;
        if (!verdict.pass)
            g["witness"] = verdict.witness;
        j["gamma_u"] = std::move(g);
    }
    return j;
}

Json module_to_json(const VicModule& m)
{
    Json j;
    j["window"] = Json::array({m.lo, m.hi});
    Json levels = Json::array();
    for (int n = m.lo; n <= m.hi; ++n) {
        const GenAction& a = m.level(n);
        Json lv;
        lv["type"] = m.tags.empty() ? "" : m.tags[n - m.lo];
        if (a.kind() == GenAction::Kind::Perm) {
            lv["kind"] = "perm";
            lv["points"] = a.dim();
            Json gens;
            for (int i = 0; i < n; ++i)
                for (int jj = 0; jj < n; ++jj)
                    if (i != jj)
                        gens[gen_key(i, jj)] = a.elem_perm(i, jj);
            gens["D1"] = a.d1_perm();
            lv["gens"] = std::move(gens);
        } else {
            lv["kind"] = "dense";
            lv["dim"] = a.dim();
            Json gens;
            for (int i = 0; i < n; ++i)
                for (int jj = 0; jj < n; ++jj)
                    if (i != jj)
                        gens[gen_key(i, jj)] = qmatrix_json(a.elem_matrix(i, jj));
            gens["D1"] = qmatrix_json(a.d1_matrix());
            lv["gens"] = std::move(gens);
        }
        levels.push_back(std::move(lv));
    }
    j["levels"] = std::move(levels);
    Json maps = Json::array();
    for (int n = m.lo; n < m.hi; ++n)
        maps.push_back(qmatrix_json(m.tmap(n)));
    j["maps"] = std::move(maps);
    return j;
}

VicModule module_from_json(const Json& j)
{
    VicModule m;
    m.lo = j.at("window").at(0).get<int>();
    m.hi = j.at("window").at(1).get<int>();
    int count = m.hi - m.lo + 1;
    if (static_cast<int>(j.at("levels").size()) != count)
        throw PreconditionError("level count does not match the window");
    for (int idx = 0; idx < count; ++idx) {
        const Json& lv = j.at("levels").at(idx);
        int n = m.lo + idx;
        std::string kind = lv.value("kind", "dense");
        const Json& gens = lv.at("gens");
        if (kind == "perm") {
            std::map<std::pair<int, int>, std::vector<int>> perms;
            for (int i = 0; i < n; ++i)
                for (int jj = 0; jj < n; ++jj)
                    if (i != jj)
                        perms.emplace(std::make_pair(i, jj),
                                      gens.at(gen_key(i, jj)).get<std::vector<int>>());
            m.levels.push_back(
                GenAction::perm(n, std::move(perms), gens.at("D1").get<std::vector<int>>()));
        } else {
            std::map<std::pair<int, int>, QMatrix> mats;
            for (int i = 0; i < n; ++i)
                for (int jj = 0; jj < n; ++jj)
                    if (i != jj)
                        mats.emplace(std::make_pair(i, jj), qmatrix_from(gens.at(gen_key(i, jj))));
            m.levels.push_back(GenAction::dense(n, std::move(mats), qmatrix_from(gens.at("D1"))));
        }
        m.tags.push_back(lv.value("type", ""));
    }
    for (const auto& mj : j.at("maps"))
        m.tmaps.push_back(qmatrix_from(mj));
    m.check_shape();
    if (!check_equivariance(m))
        throw IntegrityError("structure maps are not equivariant");
    return m;
}

IntegralRep rep_from_json(const Json& j)
{
    int n = j.at("n").get<int>();
    std::map<std::pair<int, int>, QMatrix> images;
    for (const auto& g : j.at("generators")) {
        int i = g.at("i").get<int>() - 1;
        int jj = g.at("j").get<int>() - 1;
        images.emplace(std::make_pair(i, jj), qmatrix_from(g.at("matrix")));
    }
    IntegralRep rep(n, std::move(images));
    if (j.contains("dimension") && j.at("dimension").get<int>() != rep.dim())
        throw PreconditionError("declared dimension does not match the matrices");
    return rep;
}

namespace {

Json phi_json(const PhiModule& phi)
{
    Json j;
    j["a"] = phi.a;
    j["lo"] = phi.lo;
    j["dims"] = phi.dims;
    auto stab = stabilization_degree(phi);
    if (stab)
        j["stabilization_degree"] = *stab;
    else
        j["stabilization_degree"] = "not in window";
    return j;
}

Json filtration_json(const FiltrationReport& rep)
{
    Json j;
    Json layers = Json::array();
    for (const auto& layer : rep.layers) {
        Json l;
        l["label"] = bipartition_json(layer.label);
        l["multiplicity_dims"] = layer.mult_dims;
        l["depth"] = layer.depth;
        layers.push_back(std::move(l));
    }
    j["layers"] = std::move(layers);
    j["head_boundary"] = rep.head_boundary;
    j["head_dims"] = rep.head_dims;
    j["dimension_identity"] = rep.dimension_identity;
    if (!rep.note.empty())
        j["note"] = rep.note;
    return j;
}

Json growth_json(const GrowthReport& rep)
{
    Json j;
    j["kind"] = rep.kind;
    if (rep.kind == "polynomial")
        j["degree"] = rep.degree;
    if (rep.kind == "exponential") {
        j["least_integer_base"] = rep.exp_base;
        if (rep.stable_depth)
            j["stable_depth"] = rep.stable_depth;
    }
    Json dims = Json::array();
    for (const auto& d : rep.dims)
        dims.push_back(d.get_str());
    j["dims"] = std::move(dims);
    if (rep.kind == "polynomial")
        j["pointwise_algebraic"] = rep.pointwise_algebraic_checked;
    return j;
}

} // namespace

Json vic_report(const VicModule& m, const VicOpsRequest& ops, const Config& cfg)
{
    Json j = envelope("vic-run", cfg);
    j["window"] = Json::array({m.lo, m.hi});
    Json dims = Json::array();
    for (int n = m.lo; n <= m.hi; ++n)
        dims.push_back(m.dim(n));
    j["dims"] = std::move(dims);
    if (ops.triples) {
        Json ts = Json::array();
        for (int n = m.lo; n + 2 <= m.hi; ++n) {
            auto v = validate_weak_triple(m, n, cfg.closure_dim_budget);
            Json t;
            t["levels"] = Json::array({n, n + 1, n + 2});
            t["weak"] = v.weak();
            t["strong"] = v.strong();
            if (!v.detail.empty())
                t["detail"] = v.detail;
            ts.push_back(std::move(t));
        }
        j["triples"] = std::move(ts);
    }
    if (ops.filtration)
        j["filtration"] = filtration_json(algebraic_isotypic_filtration(m, cfg.closure_dim_budget));
    if (ops.phi0)
        j["phi0"] = phi_json(covariants_phi(m, 0));
    if (ops.phi1)
        j["phi1"] = phi_json(covariants_phi(m, 1));
    if (ops.phi2)
        j["phi2"] = phi_json(covariants_phi(m, 2));
    if (ops.growth)
        j["growth"] = growth_json(growth_classify(m, cfg.closure_dim_budget));
    if (ops.stable_depth) {
        auto sd = stable_depth(m);
        Json s;
        s["ell"] = sd.ell;
        s["per_level"] = sd.per_level;
        s["propagation_ok"] = sd.propagation_ok;
        j["stable_depth"] = std::move(s);
    }
    if (ops.length) {
        auto lb = length_bound(m);
        Json l;
        l["bound"] = lb.bound;
        l["per_level"] = lb.per_level;
        l["constant_tail"] = lb.constant_tail;
        j["length"] = std::move(l);
    }
    if (ops.twist) {
        auto tw = inverse_transpose_twist(m);
        j["twist"] = Json{{"equivariant", check_equivariance(tw)}};
    }
    return j;
}

Json vic_report(const PairVicModule& m, const VicOpsRequest& ops, const Config& cfg)
{
    Json j = envelope("vic-run/pair", cfg);
    j["window"] = Json::array({m.alg.lo, m.alg.hi});
    Json dims = Json::array();
    for (int n = m.alg.lo; n <= m.alg.hi; ++n)
        dims.push_back(m.dim(n));
    j["dims"] = std::move(dims);
    if (ops.filtration)
        j["filtration"] = filtration_json(algebraic_isotypic_filtration(m, cfg.closure_dim_budget));
    if (ops.growth)
        j["growth"] = growth_json(growth_classify(m));
    if (ops.stable_depth) {
        auto sd = stable_depth(m.fin);
        Json s;
        s["ell"] = sd.ell;
        s["per_level"] = sd.per_level;
        s["propagation_ok"] = sd.propagation_ok;
        j["stable_depth"] = std::move(s);
    }
    if (ops.length) {
        auto lb = length_bound(m);
        Json l;
        l["bound"] = lb.bound;
        l["per_level"] = lb.per_level;
        l["constant_tail"] = lb.constant_tail;
        j["length"] = std::move(l);
    }
    return j;
}

std::string full_suite_report(const Config& cfg)
{
    Json all = envelope("suite", cfg);
    Json parts = Json::array();

    parts.push_back(branch_report({Partition({1}), Partition({1})}, 3, true, 0, cfg));
    {
        Int dim29(29);
        long ell6 = 6;
        long p2 = 2;
        int k2 = 2;
        parts.push_back(bounds_report(5, &dim29, &ell6, &p2, &k2, cfg));
    }
    parts.push_back(group_table_report(3, 2, "SL", cfg));
    {
        auto g = FiniteMatrixGroup::enumerate(3, 2, Variant::SL, cfg.group_order_cap);
        auto rep = IntegralRep::pullback(FiniteRep::projective_permutation(g).sum_zero_subrep());
        parts.push_back(depth_report(rep, 2, cfg));
    }
    {
        VicOpsRequest ops;
        ops.filtration = ops.phi0 = ops.phi1 = ops.growth = ops.length = ops.triples = true;
        parts.push_back(vic_report(standard_module(cfg.window_lo, std::min(cfg.window_hi, 6)), ops, cfg));
        VicOpsRequest fops;
        fops.filtration = fops.growth = fops.stable_depth = fops.length = true;
        parts.push_back(vic_report(projective_module(2, cfg.window_lo, std::min(cfg.window_hi, 6)), fops, cfg));
    }
    {
        auto wit = noetherian_witness(projective_module(2, 3, 6), 1, cfg.seed);
        Json w;
        w["dims"] = wit.dims;
        w["phi_dims"] = wit.phi_dims;
        if (wit.phi_stabilization)
            w["phi_stabilization"] = *wit.phi_stabilization;
        if (wit.generation)
            w["generation"] = *wit.generation;
        Json env = envelope("noetherian-witness", cfg);
        env["witness"] = std::move(w);
        parts.push_back(std::move(env));
    }
    all["parts"] = std::move(parts);
    return all.dump(2);
}

std::string render_text(const Json& report)
{
    std::ostringstream os;
    os << report.value("tool", "stabrep") << " " << report.value("version", "")
       << "  [" << report.value("command", "") << "]\n";
    if (report.contains("order"))
        os << "order: " << report["order"] << "  classes: " << report["class_count"]
           << "  exponent: " << report["exponent"] << "\n";
    if (report.contains("irreducibles")) {
        os << "dim  level  depth  id\n";
        for (const auto& it : report["irreducibles"])
            os << it["dimension"] << "    " << it["factoring_level"] << "      "
               << it["elementary_depth"] << "      " << it["id"].get<std::string>() << "\n";
    }
    if (report.contains("branches")) {
        os << "branches: " << report["branches"].size()
           << "  total dim: " << report["total_dimension"].get<std::string>() << "\n";
        for (const auto& it : report["branches"])
            os << "  " << it.dump() << "\n";
    }
    if (report.contains("depth"))
        os << "depth: " << report["depth"] << "  class: "
           << report.value("classification", "") << "\n";
    if (report.contains("filtration"))
        os << "filtration: " << report["filtration"].dump() << "\n";
    if (report.contains("growth"))
        os << "growth: " << report["growth"].dump() << "\n";
    if (report.contains("dims"))
        os << "dims: " << report["dims"].dump() << "\n";
    return os.str();
}

} // namespace stabrep
