#include "dpg/emit.hpp"

#include <sstream>

#include "dpg/backend.hpp"
#include "dpg/closed_forms.hpp"
#include "dpg/leonard.hpp"

namespace dpg {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct NamedPoly {
    std::string id;
    const LP* poly;
};

std::vector<NamedPoly> ell_rows(const NonsymFamily& fam) {
    std::vector<NamedPoly> rows;
    for (int i = 0; i <= fam.D; ++i) {
        rows.push_back({"l_" + std::to_string(i) + "^-", &fam.ell_minus[i]});
        rows.push_back({"l_" + std::to_string(i) + "^+", &fam.ell_plus[i]});
    }
    return rows;
}

}  // namespace

std::string scalar_text(const Scalar& s, long q0) { return q0 == 0 ? s.str() : eval_at(s, q0).str(); }

std::string ell_polys_csv(const NonsymFamily& fam, long q0) {
    std::ostringstream os;
    os << "poly";
    for (int k = -fam.D - 1; k <= fam.D; ++k) os << ",eta^" << k;
    os << "\n";
    for (const auto& row : ell_rows(fam)) {
        os << csv_field(row.id);
        for (int k = -fam.D - 1; k <= fam.D; ++k) os << "," << csv_field(scalar_text(row.poly->coeff(k), q0));
        os << "\n";
    }
    return os.str();
}

nlohmann::json ell_polys_json(const NonsymFamily& fam, long q0) {
    nlohmann::json j;
    j["D"] = fam.D;
    j["e"] = fam.e.get_str();
    j["q"] = q0 == 0 ? nlohmann::json("formal") : nlohmann::json(q0);
    j["tau"] = scalar_text(fam.tau, q0);
    nlohmann::json polys = nlohmann::json::object();
    for (const auto& row : ell_rows(fam)) {
        nlohmann::json coeffs = nlohmann::json::object();
        for (const auto& [k, c] : row.poly->terms()) coeffs[std::to_string(k)] = scalar_text(c, q0);
        polys[row.id] = std::move(coeffs);
    }
    j["polynomials"] = std::move(polys);
    return j;
}

namespace {

struct ParamRow {
    std::string system, quantity;
    int i;
    std::string value;
};

std::vector<ParamRow> param_rows(const Rational& e, int D, long q0) {
    std::vector<ParamRow> rows;
    for (const auto& s : four_sequences(e, D)) {
        auto add = [&](const std::string& what, int i, const Scalar& v) {
            rows.push_back({s.name, what, i, scalar_text(v, q0)});
        };
        rows.push_back({s.name, "d", -1, std::to_string(s.d)});
        add("alpha", -1, s.alpha);
        add("alpha_star", -1, s.alpha_star);
        add("beta", -1, s.beta);
        add("beta_star", -1, s.beta_star);
        add("gamma", -1, s.gamma);
        add("tau", -1, s.tau);
        auto p = param_array(s);
        for (int i = 0; i <= s.d; ++i) add("theta", i, p.theta[i]);
        for (int i = 0; i <= s.d; ++i) add("theta_star", i, p.theta_star[i]);
        for (int i = 1; i <= s.d; ++i) add("phi", i, p.phi[i]);
        for (int i = 1; i <= s.d; ++i) add("phi_split", i, p.phi_split[i]);
    }
    return rows;
}

}  // namespace

std::string param_arrays_csv(const Rational& e, int D, long q0) {
    std::ostringstream os;
    os << "system,quantity,i,value\n";
    for (const auto& r : param_rows(e, D, q0)) {
        os << csv_field(r.system) << "," << r.quantity << "," << (r.i < 0 ? std::string() : std::to_string(r.i))
           << "," << csv_field(r.value) << "\n";
    }
    return os.str();
}

nlohmann::json param_arrays_json(const Rational& e, int D, long q0) {
    nlohmann::json systems = nlohmann::json::object();
    for (const auto& r : param_rows(e, D, q0)) {
        auto& slot = systems[r.system][r.quantity];
        if (r.i < 0) {
            slot = r.value;
        } else {
            slot.push_back(r.value);
        }
    }
    return {{"D", D}, {"e", e.get_str()}, {"q", q0 == 0 ? nlohmann::json("formal") : nlohmann::json(q0)},
            {"systems", systems}};
}

namespace {

template <class B>
nlohmann::json gram_json(const NonsymFamily& fam, const B& be, const Vector<Scalar>& counts, bool& ok) {
    auto g = ell_gram(fam, be);
    nlohmann::json rows = nlohmann::json::array();
    ok = true;
    for (std::size_t a = 0; a < g.rows(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t b = 0; b < g.cols(); ++b) {
            row.push_back(to_string(g(a, b)));
            auto want = a == b ? be.lift(counts[a]) : typename B::Field(0);
            ok = ok && g(a, b) == want;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

nlohmann::json orthogonality_json(const Instance& inst) {
    const Rational e = inst.params.e();
    const int D = inst.params.D;
    NonsymFamily fam = build_family(e, D);
    const auto counts = closed_forms(e, D).counts;
    nlohmann::json j;
    j["instance"] = inst.label();
    bool ok = false;
    j["gram"] = inst.formal() ? gram_json(fam, FormalBackend{}, counts, ok)
                              : gram_json(fam, ConcreteBackend{inst.q0}, counts, ok);
    j["gram_is_diagonal_with_cell_sizes"] = ok;
    nlohmann::json sizes = nlohmann::json::array();
    nlohmann::json labels = nlohmann::json::array();
    for (std::size_t k = 0; k < counts.size(); ++k) {
        sizes.push_back(scalar_text(counts[k], inst.q0));
        labels.push_back(cell_label(k));
    }
    j["cells"] = labels;
    j["cell_sizes"] = sizes;
    nlohmann::json lambda = nlohmann::json::object();
    nlohmann::json norm = nlohmann::json::object();
    nlohmann::json cross = nlohmann::json::object();
    for (int i = -D; i < D; ++i) {
        lambda[std::to_string(i)] = scalar_text(fam.lambda_at(i), inst.q0);
        norm[std::to_string(i)] = scalar_text(fam.y_norm[i + D], inst.q0);
    }
    for (int i = 1; i < D; ++i) cross[std::to_string(i)] = scalar_text(fam.y_cross[i], inst.q0);
    j["lambda"] = lambda;
    j["y_norm"] = norm;
    j["y_cross"] = cross;
    return j;
}

}  // namespace dpg
