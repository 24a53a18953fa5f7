#include "approxdim/report.hpp"

namespace approxdim {

json chain_json(const ApproximationChain& chain)
{
    json steps = json::array();
    for (const ChainStep& s : chain.steps) {
        json step;
        step["t_dims"] = s.t_prev->dims;
        step["omega_multiplicities"] = s.multiplicities;
        step["mono"] = s.mono;
        steps.push_back(std::move(step));
    }
    return json{{"verdict", chain.verdict.render()}, {"steps", std::move(steps)}};
}

json hypothesis_report_json(const HypothesisReport& report, const AlgebraPtr& alg)
{
    json nodes = json::array();
    for (int v : report.node_vertices)
        nodes.push_back("S" + std::to_string(v + 1));
    json blocks = json::array();
    for (const auto& b : report.semisimple_blocks) {
        json verts = json::array();
        for (int v : b)
            verts.push_back(v + 1);
        blocks.push_back(std::move(verts));
    }
    json proj_inj = json::array();
    for (const RepPtr& p : report.proj_inj) {
        // indecomposable projectives are determined by their top vertex
        RepPtr top = radical_socle_top(p).top.rep;
        for (int v = 0; v < alg->vertex_count(); ++v)
            if (top->dims[v] == 1)
                proj_inj.push_back("P" + std::to_string(v + 1));
    }
    return json{{"nodes", std::move(nodes)},
                {"semisimple_blocks", std::move(blocks)},
                {"self_injective", report.self_injective},
                {"proj_inj", std::move(proj_inj)}};
}

json check_report_json(const CheckReport& report)
{
    json flags = json::object();
    for (const HypothesisFlag& f : report.flags)
        flags[f.name] = f.value;
    json evidence = json::object();
    for (std::size_t i = 0; i < report.evidence_chains.size(); ++i) {
        std::string label = i < report.evidence_labels.size() ? report.evidence_labels[i]
                                                              : "chain" + std::to_string(i);
        evidence[label] = chain_json(report.evidence_chains[i]);
    }
    return json{{"inputs", report.inputs},      {"lhs", report.lhs},
                {"rhs", report.rhs},            {"pass", report.pass},
                {"hypothesis_flags", std::move(flags)}, {"evidence", std::move(evidence)}};
}

json check_run_json(const CheckRun& run)
{
    json reports = json::array();
    for (const CheckReport& r : run.reports)
        reports.push_back(check_report_json(r));
    return json{{"pair", run.pair},
                {"check", check_name(run.kind)},
                {"cutoff", run.cutoff},
                {"seed", run.seed},
                {"pass", run.pass},
                {"hypothesis_ok", run.hypothesis_ok},
                {"reports", std::move(reports)}};
}

json emit_report(const std::vector<CheckRun>& runs, std::uint64_t seed)
{
    json checks = json::array();
    for (const CheckRun& r : runs)
        checks.push_back(check_run_json(r));
    return json{{"tool", "approxdim"},
                {"version", kToolVersion},
                {"seed", seed},
                {"checks", std::move(checks)}};
}

} // namespace approxdim
