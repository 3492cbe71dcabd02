#include "oblock/report.hpp"

#include <sstream>

namespace oblock {

std::string poly_str(const LaurentPoly& p) { return p.str(); }

Json weight_json(const LieDatum& datum, const Weight& w)
{
    Json j;
    Json head = Json::array(), tail = Json::array();
    for (int p = 0; p < datum.m(); ++p)
        head.push_back(half2_string(w.coords2[p]));
    for (int p = datum.m(); p < datum.rank(); ++p)
        tail.push_back(half2_string(w.coords2[p]));
    j["head"] = head;
    j["tail"] = tail;
    j["d"] = half2_string(w.level2);
    return j;
}

Json root_json(const LieDatum& datum, const RootVec& r)
{
    Json coeffs = Json::array();
    for (int p = 0; p < datum.rank(); ++p)
        coeffs.push_back(r[p]);
    Json j;
    j["indices"] = datum.index_set();
    j["coeffs"] = coeffs;
    return j;
}

Json realize_report(const LieDatum& datum, const RealizationReport& verification)
{
    Json j;
    j["type"] = std::string(1, to_char(datum.type()));
    j["m"] = datum.m();
    j["n"] = datum.n();
    if (datum.degenerate_diagram())
        j["degenerate_diagram"] = true;
    Json roots = Json::array();
    for (std::size_t s = 0; s < datum.num_simple(); ++s) {
        const SimpleRoot& sr = datum.simple_roots()[s];
        const Coroot& co = datum.coroots()[s];
        Json r;
        r["label"] = sr.label;
        r["coeffs"] = sr.coeff;
        Json cart = Json::array();
        for (long long c : co.cartan)
            cart.push_back(c);
        r["coroot_cartan"] = cart;
        r["coroot_k"] = co.k_coeff;
        roots.push_back(std::move(r));
    }
    j["simple_roots"] = roots;
    j["num_positive_roots"] = datum.positive_roots().size();
    Json v;
    v["pass"] = verification.pass;
    v["root_vector_checks"] = verification.root_vector_checks;
    v["sampled_pairs"] = verification.sampled_pairs;
    v["sampled_triples"] = verification.sampled_triples;
    if (!verification.first_failure.empty())
        v["first_failure"] = verification.first_failure;
    j["verification"] = v;
    return j;
}

Json block_report(const LieDatum& datum, const BlockPoset& block)
{
    Json j;
    j["anchor"] = weight_json(datum, block.anchor);
    j["anchor_regular"] = block.anchor_regular;
    Json els = Json::array();
    for (const BlockElement& el : block.elements) {
        Json e;
        e["weight"] = weight_json(datum, el.weight);
        e["length"] = el.len;
        e["in_p"] = el.in_p;
        e["word"] = reduced_word(el.w, datum);
        els.push_back(std::move(e));
    }
    j["elements"] = els;
    j["size_pminus"] = block.elements.size();
    j["size_p"] = block.p_subset.size();
    if (block.elements.size() <= 400) {
        Json covers = Json::array();
        for (const auto& [lo, hi] : block_covers(block, datum))
            covers.push_back(Json::array({lo, hi}));
        j["covers"] = covers;
    }
    return j;
}

namespace {

Json poly_matrix_json(const PolyMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j)
            row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

Json matrices_report(const LieDatum& datum, const BlockPoset& block, const GradedMatrices& gm)
{
    Json j;
    Json labels = Json::array();
    for (std::size_t i = 0; i < gm.labels.size(); ++i) {
        Json l;
        l["weight"] = weight_json(datum, block.elements[gm.labels[i]].weight);
        l["length"] = gm.lengths[i];
        labels.push_back(std::move(l));
    }
    j["labels"] = labels;
    j["D"] = poly_matrix_json(gm.dec);
    j["ExtDL"] = poly_matrix_json(gm.ext_dl);
    j["C"] = poly_matrix_json(gm.cartan);
    j["E"] = poly_matrix_json(gm.ext_ll);
    return j;
}

Json certificate_json(const CertificateItem& item)
{
    Json j;
    j["name"] = item.name;
    j["pass"] = item.pass;
    if (!item.detail.empty())
        j["detail"] = item.detail;
    return j;
}

Json koszul_json(const KoszulReport& rep)
{
    Json j;
    j["pass"] = rep.pass;
    Json items = Json::array();
    for (const CertificateItem& it : rep.items)
        items.push_back(certificate_json(it));
    j["items"] = items;
    return j;
}

Json stability_json(const StabilityReport& rep)
{
    Json j;
    j["pass"] = rep.pass;
    j["k"] = rep.k;
    j["n"] = rep.n;
    j["labels_k"] = rep.labels_k;
    j["labels_n"] = rep.labels_n;
    j["label_bijection"] = rep.label_bijection;
    j["dec_equal"] = rep.dec_equal;
    j["ext_dl_equal"] = rep.ext_dl_equal;
    j["cartan_equal"] = rep.cartan_equal;
    j["ext_ll_geq"] = rep.ext_ll_geq;
    j["ext_ll_deg1_equal"] = rep.ext_ll_deg1_equal;
    j["ext_ll_equal_entries"] = rep.ext_ll_equal_entries;
    j["ext_ll_total_entries"] = rep.ext_ll_total_entries;
    if (!rep.detail.empty())
        j["detail"] = rep.detail;
    return j;
}

Json klambda_json(const LieDatum& datum, const KLambdaReport& rep)
{
    (void)datum;
    Json j;
    j["k_lambda"] = rep.k_lambda;
    j["tail_constant"] = half2_string(rep.tail_constant2);
    j["decreasing_premise"] = rep.decreasing_premise;
    j["symbolic_certificate"] = rep.symbolic_certificate;
    j["enumerated_ranks"] = rep.enumerated_ranks;
    j["enumeration_confirms"] = rep.enumeration_confirms;
    if (!rep.detail.empty())
        j["detail"] = rep.detail;
    return j;
}

Json dual_block_json(const LieDatum& datum, const DualBlockLabels& labels)
{
    Json j;
    j["ok"] = labels.ok;
    if (!labels.ok) {
        j["failure"] = labels.failure;
        return j;
    }
    j["phi"] = weight_json(datum, labels.phi);
    j["a"] = half2_string(labels.a2);
    j["n0"] = labels.n0;
    j["y_singular"] = labels.y_singular;
    j["y_prime"] = labels.y_prime;
    Json lab = Json::array();
    for (const Weight& w : labels.labels)
        lab.push_back(weight_json(datum, w));
    j["labels"] = lab;
    j["num_labels"] = labels.labels.size();
    j["stabilizer_matches"] = labels.stabilizer_matches;
    if (labels.lambda_block_size) {
        j["lambda_block_size"] = *labels.lambda_block_size;
        j["size_bijection"] = labels.size_bijection;
    }
    return j;
}

Json character_json(const LieDatum& datum, const Character& ch)
{
    Json j;
    j["anchor"] = weight_json(datum, ch.anchor());
    j["depth"] = ch.depth_bound();
    Json terms = Json::array();
    for (const auto& [w, t] : ch.terms()) {
        Json e;
        e["weight"] = weight_json(datum, w);
        e["mult"] = t.mult;
        e["depth"] = t.depth;
        terms.push_back(std::move(e));
    }
    j["terms"] = terms;
    return j;
}

namespace {

std::string csv_quote(const std::string& s)
{
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string matrix_csv(const PolyMatrix& mat, const std::vector<std::string>& labels)
{
    std::ostringstream os;
    os << "label";
    for (const std::string& l : labels)
        os << "," << csv_quote(l);
    os << "\n";
    for (std::size_t i = 0; i < mat.size(); ++i) {
        os << csv_quote(labels[i]);
        for (std::size_t j = 0; j < mat.size(); ++j)
            os << "," << csv_quote(mat(i, j).str());
        os << "\n";
    }
    return os.str();
}

std::string character_csv(const LieDatum& datum, const Character& ch)
{
    std::ostringstream os;
    for (int p = 0; p < datum.rank(); ++p)
        os << "c" << datum.index_of_pos(p) << ",";
    os << "d,mult,depth\n";
    for (const auto& [w, t] : ch.terms()) {
        for (int p = 0; p < datum.rank(); ++p)
            os << csv_quote(half2_string(w.coords2[p])) << ",";
        os << csv_quote(half2_string(w.level2)) << "," << t.mult << "," << t.depth << "\n";
    }
    return os.str();
}

} // namespace oblock
