#include "conetrace/geometry.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace conetrace {

ProfileParseError::ProfileParseError(int line, const std::string& what)
    : std::runtime_error("profile csv, line " + std::to_string(line) + ": " + what),
      line_(line) {}

ConeData from_derivatives(double fprime0, double fsecond0) {
    if (!(fprime0 > 0.0))
        throw std::invalid_argument("from_derivatives: requires f'(0) > 0");
    ConeData cone;
    cone.fprime0 = fprime0;
    cone.fsecond0 = fsecond0;
    cone.alpha = 1.0 / fprime0;
    cone.k_f = -fsecond0 / fprime0;
    return cone;
}

EmbeddingData embedding(const ConeData& cone) {
    EmbeddingData out;
    if (cone.fprime0 > 1.0) return out;  // not isometrically embeddable
    out.embeddable = true;
    out.phi = std::asin(cone.fprime0);
    if (cone.fprime0 == 1.0) return out;  // phi = pi/2, profile curvature undefined
    out.kappa0_defined = true;
    out.kappa0 = cone.fsecond0 / cone.fprime0 * std::tan(out.phi);
    return out;
}

CurvatureClass curvature_class(const ConeData& cone) {
    if (cone.fsecond0 == 0.0) return CurvatureClass::finite;
    return cone.fsecond0 < 0.0 ? CurvatureClass::plus_infinity : CurvatureClass::minus_infinity;
}

const char* to_string(CurvatureClass c) {
    switch (c) {
        case CurvatureClass::finite: return "finite";
        case CurvatureClass::plus_infinity: return "plus_infinity";
        case CurvatureClass::minus_infinity: return "minus_infinity";
    }
    return "unknown";
}

ConeData from_profile_samples(const std::vector<ProfileSample>& samples, int degree) {
    if (degree != 2 && degree != 3)
        throw std::invalid_argument("from_profile_samples: degree must be 2 or 3");
    if (static_cast<int>(samples.size()) < degree + 1)
        throw FitError("from_profile_samples: needs at least degree+1 samples");
    for (size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].r > 0.0) || !(samples[i].f_r > 0.0))
            throw FitError("from_profile_samples: samples require r > 0 and f > 0");
        if (i > 0 && !(samples[i].r > samples[i - 1].r))
            throw FitError("from_profile_samples: samples must have strictly increasing r");
    }

    const int p = degree;  // unknowns: a, b (, c) against basis r, r^2/2, r^3/6
    std::array<std::array<double, 3>, 3> m{};
    std::array<double, 3> rhs{};
    for (const ProfileSample& s : samples) {
        const std::array<double, 3> basis = {s.r, 0.5 * s.r * s.r, s.r * s.r * s.r / 6.0};
        for (int i = 0; i < p; ++i) {
            rhs[i] += basis[i] * s.f_r;
            for (int j = 0; j < p; ++j) m[i][j] += basis[i] * basis[j];
        }
    }
    // Column scaling tames the conditioning of the power basis.
    std::array<double, 3> scale{1.0, 1.0, 1.0};
    for (int i = 0; i < p; ++i) scale[i] = std::sqrt(m[i][i]);
    for (int i = 0; i < p; ++i) {
        if (!(scale[i] > 0.0)) throw FitError("from_profile_samples: degenerate samples");
        rhs[i] /= scale[i];
        for (int j = 0; j < p; ++j) m[i][j] /= scale[i] * scale[j];
    }
    // Gaussian elimination with partial pivoting on the scaled normal system.
    std::array<int, 3> perm{0, 1, 2};
    for (int col = 0; col < p; ++col) {
        int pivot = col;
        for (int row = col + 1; row < p; ++row)
            if (std::abs(m[perm[row]][col]) > std::abs(m[perm[pivot]][col])) pivot = row;
        std::swap(perm[col], perm[pivot]);
        const double d = m[perm[col]][col];
        if (std::abs(d) < 1e-12) throw FitError("from_profile_samples: degenerate samples");
        for (int row = col + 1; row < p; ++row) {
            const double factor = m[perm[row]][col] / d;
            for (int j = col; j < p; ++j) m[perm[row]][j] -= factor * m[perm[col]][j];
            rhs[perm[row]] -= factor * rhs[perm[col]];
        }
    }
    std::array<double, 3> coeff{};
    for (int col = p - 1; col >= 0; --col) {
        double v = rhs[perm[col]];
        for (int j = col + 1; j < p; ++j) v -= m[perm[col]][j] * coeff[j];
        coeff[col] = v / m[perm[col]][col];
    }
    for (int i = 0; i < p; ++i) coeff[i] /= scale[i];

    if (!(coeff[0] > 0.0))
        throw std::invalid_argument("from_profile_samples: fitted f'(0) <= 0");
    return from_derivatives(coeff[0], coeff[1]);
}

std::vector<ProfileSample> parse_profile_csv(std::istream& in) {
    auto trim = [](const std::string& s) {
        const char* ws = " \t\r\n";
        const size_t b = s.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        const size_t e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    };

    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw ProfileParseError(1, "empty file");
    ++line_no;
    if (trim(line) != "r,f") throw ProfileParseError(line_no, "expected header \"r,f\"");

    auto parse_field = [&trim](const std::string& field, int at_line) {
        const std::string f = trim(field);
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(f, &used);
        } catch (const std::exception&) {
            throw ProfileParseError(at_line, "malformed number \"" + f + "\"");
        }
        if (used != f.size())
            throw ProfileParseError(at_line, "malformed number \"" + f + "\"");
        return v;
    };

    std::vector<ProfileSample> samples;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        const size_t comma = t.find(',');
        if (comma == std::string::npos)
            throw ProfileParseError(line_no, "expected two comma-separated values");
        ProfileSample s;
        s.r = parse_field(t.substr(0, comma), line_no);
        s.f_r = parse_field(t.substr(comma + 1), line_no);
        if (!(s.r > 0.0) || !(s.f_r > 0.0))
            throw ProfileParseError(line_no, "requires r > 0 and f > 0");
        samples.push_back(s);
    }
    if (samples.empty()) throw ProfileParseError(line_no, "no samples");
    return samples;
}

std::vector<ProfileSample> load_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile csv: " + path);
    return parse_profile_csv(in);
}

}  // namespace conetrace
