#include "coweval/matching.hpp"

namespace coweval {

const char* anterior_variant_name(AnteriorVariant v) {
    switch (v) {
        case AnteriorVariant::WithAcom: return "with-Acom";
        case AnteriorVariant::MissingAcom: return "missing-Acom";
        case AnteriorVariant::ThirdA2: return "3rd-A2";
    }
    return "?";
}

const char* posterior_variant_name(PosteriorVariant v) {
    switch (v) {
        case PosteriorVariant::BothPcoms: return "both-Pcoms";
        case PosteriorVariant::RPcomOnly: return "R-Pcom-only";
        case PosteriorVariant::LPcomOnly: return "L-Pcom-only";
        case PosteriorVariant::NoPcoms: return "no-Pcoms";
    }
    return "?";
}

VariantDiagnosis classify_variants(const ComponentGraph& gt_graph) {
    VariantDiagnosis d;
    if (gt_graph.present(Segment::ThirdA2))
        d.anterior = AnteriorVariant::ThirdA2;
    else if (gt_graph.present(Segment::Acom))
        d.anterior = AnteriorVariant::WithAcom;
    else
        d.anterior = AnteriorVariant::MissingAcom;

    const bool r = gt_graph.present(Segment::RPcom);
    const bool l = gt_graph.present(Segment::LPcom);
    d.posterior = r && l   ? PosteriorVariant::BothPcoms
                  : r      ? PosteriorVariant::RPcomOnly
                  : l      ? PosteriorVariant::LPcomOnly
                           : PosteriorVariant::NoPcoms;
    return d;
}

namespace {

struct Checker {
    const ComponentGraph& gt;
    const ComponentGraph& pred;
    MatchResult result;

    void fail(std::string condition) {
        result.matched = false;
        result.failed_conditions.push_back(std::move(condition));
    }

    bool presence_matches(Segment s, const std::string& tag) {
        if (gt.present(s) != pred.present(s)) {
            fail(tag + "-presence");
            return false;
        }
        return true;
    }

    void check_b0(Segment s, const std::string& tag) {
        if (pred.component_count(s) != gt.component_count(s)) fail(tag + "-b0");
    }

    // Communicating vessel: presence must match; when present it must touch
    // every required neighbor and carry no β0 error.
    void check_connector(Segment s, std::initializer_list<Segment> required, const std::string& tag) {
        if (!presence_matches(s, tag)) return;
        if (!gt.present(s)) return;
        check_b0(s, tag);
        for (Segment nb : required)
            if (!pred.classes_adjacent(s, nb)) {
                fail(tag + "-connection");
                return;
            }
    }

    // Main vessel: no β0 error and prediction-side adjacency to each listed
    // neighbor equal to the GT side (e.g. ACA to ICA if A1 present, else
    // just to Acom).
    void check_mainline(Segment s, std::initializer_list<Segment> neighbors, const std::string& tag) {
        check_b0(s, tag);
        for (Segment nb : neighbors)
            if (pred.classes_adjacent(s, nb) != gt.classes_adjacent(s, nb)) {
                fail(tag + "-neighborhood");
                return;
            }
    }
};

}  // namespace

MatchResult match_anterior(const ComponentGraph& gt_graph, const ComponentGraph& pred_graph,
                           const EvalOptions& opts) {
    Checker c{gt_graph, pred_graph, {}};
    c.check_connector(Segment::Acom, {Segment::RACA, Segment::LACA}, "Acom");
    c.check_connector(Segment::ThirdA2, {Segment::Acom}, "3rd-A2");
    if (opts.ipsilateral) {
        c.check_mainline(Segment::RACA, {Segment::RICA, Segment::Acom}, "R-ACA");
        c.check_mainline(Segment::LACA, {Segment::LICA, Segment::Acom}, "L-ACA");
    } else {
        c.check_mainline(Segment::RACA, {Segment::RICA, Segment::LICA, Segment::Acom}, "R-ACA");
        c.check_mainline(Segment::LACA, {Segment::RICA, Segment::LICA, Segment::Acom}, "L-ACA");
    }
    return c.result;
}

MatchResult match_posterior(const ComponentGraph& gt_graph, const ComponentGraph& pred_graph,
                            const EvalOptions& opts) {
    Checker c{gt_graph, pred_graph, {}};
    if (opts.ipsilateral) {
        c.check_connector(Segment::RPcom, {Segment::RICA, Segment::RPCA}, "R-Pcom");
        c.check_connector(Segment::LPcom, {Segment::LICA, Segment::LPCA}, "L-Pcom");
        c.check_mainline(Segment::RPCA, {Segment::BA, Segment::RPcom}, "R-PCA");
        c.check_mainline(Segment::LPCA, {Segment::BA, Segment::LPcom}, "L-PCA");
    } else {
        auto any_side = [&](Segment s, Segment ica_r, Segment ica_l, Segment pca_r, Segment pca_l,
                            const std::string& tag) {
            if (!c.presence_matches(s, tag)) return;
            if (!gt_graph.present(s)) return;
            c.check_b0(s, tag);
            const bool ica = c.pred.classes_adjacent(s, ica_r) || c.pred.classes_adjacent(s, ica_l);
            const bool pca = c.pred.classes_adjacent(s, pca_r) || c.pred.classes_adjacent(s, pca_l);
            if (!ica || !pca) c.fail(tag + "-connection");
        };
        any_side(Segment::RPcom, Segment::RICA, Segment::LICA, Segment::RPCA, Segment::LPCA, "R-Pcom");
        any_side(Segment::LPcom, Segment::RICA, Segment::LICA, Segment::RPCA, Segment::LPCA, "L-Pcom");
        c.check_mainline(Segment::RPCA, {Segment::BA, Segment::RPcom, Segment::LPcom}, "R-PCA");
        c.check_mainline(Segment::LPCA, {Segment::BA, Segment::RPcom, Segment::LPcom}, "L-PCA");
    }
    return c.result;
}

MatchReport match_case(const std::string& case_id, const ComponentGraph& gt_graph,
                       const ComponentGraph& pred_graph, const EvalOptions& opts) {
    MatchReport report;
    report.case_id = case_id;
    const MatchResult ant = match_anterior(gt_graph, pred_graph, opts);
    const MatchResult post = match_posterior(gt_graph, pred_graph, opts);
    report.anterior_matched = ant.matched;
    report.posterior_matched = post.matched;
    for (const auto& f : ant.failed_conditions) report.failed_conditions.push_back("anterior/" + f);
    for (const auto& f : post.failed_conditions) report.failed_conditions.push_back("posterior/" + f);
    return report;
}

MatchRates aggregate_match_rates(const std::vector<MatchReport>& reports,
                                 const std::vector<VariantDiagnosis>& diagnoses) {
    if (reports.size() != diagnoses.size())
        throw std::invalid_argument("aggregate_match_rates: case lists have different lengths");
    MatchRates rates;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        auto& a = rates.anterior[diagnoses[i].anterior];
        ++a.total;
        a.matched += reports[i].anterior_matched;
        auto& p = rates.posterior[diagnoses[i].posterior];
        ++p.total;
        p.matched += reports[i].posterior_matched;
    }
    return rates;
}

}  // namespace coweval
