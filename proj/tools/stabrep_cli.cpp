#include "stabrep/canonical.hpp"
#include "stabrep/errors.hpp"
#include "stabrep/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace stabrep;

namespace {

Partition parse_partition(const std::string& s)
{
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty())
            parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

Json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void emit(const Json& report, bool json_mode)
{
    if (json_mode)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << render_text(report);
}

VicModule builtin_module(const std::string& name, int lo, int hi)
{
    if (name == "trivial")
        return trivial_module(lo, hi);
    if (name == "standard")
        return standard_module(lo, hi);
    if (name == "projective2")
        return projective_module(2, lo, hi);
    if (name == "projective3")
        return projective_module(3, lo, hi);
    if (name == "projective5")
        return projective_module(5, lo, hi);
    if (name == "sumzero2")
        return sumzero_module(2, lo, hi);
    if (name == "torsion-head")
        return torsion_head_module(lo, hi);
    throw PreconditionError("unknown builtin module: " + name);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"stabrep: exact computations for depth of SL_n(Z)-representations, "
                 "congruence-group tables, GL_n branching, and VIC(Z) window modules"};
    app.require_subcommand(1);

    Config cfg;
    bool json_mode = false;
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--group-cap", cfg.group_order_cap, "group order cap");
    app.add_option("--cyclotomic-cap", cfg.cyclotomic_cap, "cyclotomic order cap");
    app.add_option("--samples", cfg.samples, "sample count for randomized checks");
    app.add_flag("--json", json_mode, "machine-readable output");

    // branch
    auto* branch = app.add_subcommand("branch", "Pieri / Littlewood-Richardson restriction");
    std::string plus_s, minus_s;
    int rank = 3;
    bool pieri = false;
    int lr_m = 0;
    branch->add_option("--plus", plus_s, "plus partition, comma separated");
    branch->add_option("--minus", minus_s, "minus partition, comma separated");
    branch->add_option("--rank", rank, "rank n")->required();
    branch->add_flag("--pieri", pieri, "restrict to GL_(n-1) x GL_1");
    branch->add_option("--lr", lr_m, "restrict to GL_m x GL_(n-m)");

    // dim
    auto* dim = app.add_subcommand("dim", "Weyl dimension and dimension polynomial");
    std::string dplus_s, dminus_s;
    int drank = 3;
    dim->add_option("--plus", dplus_s, "plus partition");
    dim->add_option("--minus", dminus_s, "minus partition");
    dim->add_option("--rank", drank, "rank n")->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "dimension/depth bound formulas");
    int bn = 3;
    std::string bdim;
    long bell = 0, bp = 0;
    int bk = 0;
    bounds->add_option("--n", bn, "rank n")->required();
    bounds->add_option("--dim", bdim, "representation dimension");
    bounds->add_option("--ell", bell, "depth ell");
    bounds->add_option("--p", bp, "prime p");
    bounds->add_option("--k", bk, "exponent k");

    // depth
    auto* depth_cmd = app.add_subcommand("depth", "depth analysis of an SL_n(Z)-representation");
    std::string rep_path;
    long gamma_u_ell = 0;
    depth_cmd->add_option("--rep", rep_path, "representation JSON file")->required();
    depth_cmd->add_option("--gamma-u", gamma_u_ell, "run the sampled Gamma U_n(ell) check");

    // group-table
    auto* gt = app.add_subcommand("group-table", "character table and levels of a finite matrix group");
    int gn = 3;
    long gell = 2;
    std::string gvariant = "SL";
    gt->add_option("n", gn, "rank")->required();
    gt->add_option("ell", gell, "modulus")->required();
    gt->add_option("variant", gvariant, "SL | SL+- | GL | U");

    // vic-run
    auto* vic = app.add_subcommand("vic-run", "analyze a VIC(Z) window module");
    std::string module_path, builtin, ops_csv = "growth";
    int wlo = 3, whi = 6;
    vic->add_option("--module", module_path, "module JSON file");
    vic->add_option("--builtin", builtin, "trivial|standard|projective2|projective3|projective5|sumzero2|torsion-head");
    vic->add_option("--window", wlo, "window low (builtin only)");
    vic->add_option("--window-hi", whi, "window high (builtin only)");
    vic->add_option("--ops", ops_csv, "comma list: filtration,phi0,phi1,phi2,growth,stable-depth,length,triples,twist");

    // suite
    auto* suite = app.add_subcommand("suite", "deterministic multi-command report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*branch) {
            Bipartition b{parse_partition(plus_s), parse_partition(minus_s)};
            if (!pieri && lr_m <= 0)
                pieri = true;
            emit(branch_report(b, rank, pieri, lr_m, cfg), json_mode);
        } else if (*dim) {
            Bipartition b{parse_partition(dplus_s), parse_partition(dminus_s)};
            emit(dim_report(b, drank, cfg), json_mode);
        } else if (*bounds) {
            Int bd;
            bool has_dim = !bdim.empty();
            if (has_dim)
                bd = Int(bdim);
            emit(bounds_report(bn, has_dim ? &bd : nullptr, bell > 0 ? &bell : nullptr,
                               bp > 0 ? &bp : nullptr, bk > 0 ? &bk : nullptr, cfg),
                 json_mode);
        } else if (*depth_cmd) {
            auto rep = rep_from_json(load_json(rep_path));
            emit(depth_report(rep, gamma_u_ell, cfg), json_mode);
        } else if (*gt) {
            emit(group_table_report(gn, gell, gvariant, cfg), json_mode);
        } else if (*vic) {
            VicOpsRequest req;
            std::stringstream ss(ops_csv);
            std::string op;
            while (std::getline(ss, op, ',')) {
                if (op == "filtration")
                    req.filtration = true;
                else if (op == "phi0")
                    req.phi0 = true;
                else if (op == "phi1")
                    req.phi1 = true;
                else if (op == "phi2")
                    req.phi2 = true;
                else if (op == "growth")
                    req.growth = true;
                else if (op == "stable-depth")
                    req.stable_depth = true;
                else if (op == "length")
                    req.length = true;
                else if (op == "triples")
                    req.triples = true;
                else if (op == "twist")
                    req.twist = true;
                else if (!op.empty())
                    throw CLI::ValidationError("--ops", "unknown op name: " + op);
            }
            VicModule m = module_path.empty() ? builtin_module(builtin.empty() ? "standard" : builtin, wlo, whi)
                                              : module_from_json(load_json(module_path));
            emit(vic_report(m, req, cfg), json_mode);
        } else if (*suite) {
            std::cout << full_suite_report(cfg) << "\n";
        }
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 2;
    } catch (const IntegrityError& e) {
        std::cerr << "input integrity failure: " << e.what() << "\n";
        return 3;
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const Json::exception& e) {
        std::cerr << "input integrity failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
