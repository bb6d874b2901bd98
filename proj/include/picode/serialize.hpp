/*
 * Copyright 2026 the picode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PICODE_SERIALIZE_HPP
#define PICODE_SERIALIZE_HPP

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

#include "picode/codegen.hpp"
#include "picode/errors.hpp"
#include "picode/klverify.hpp"
#include "picode/polynomial.hpp"
#include "picode/radical.hpp"

namespace picode {

// All files are JSON. Field order is part of the format (descriptors round
// trip byte-for-byte), hence ordered_json throughout.
using Json = nlohmann::ordered_json;

// ---- scalars -------------------------------------------------------------

inline Json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw Error(ErrorKind::ParseError, "expected rational as \"p/q\" string");
}

// Radicands are JSON integers when they fit, decimal strings otherwise
// (certificate values can carry radicands beyond 2^63).
inline Json to_json(const RadicalSum& s) {
    Json arr = Json::array();
    for (const auto& [rad, coeff] : s.terms()) {
        Json term;
        term["coeff"] = coeff.to_string();
        if (rad <= BigInt(std::numeric_limits<long long>::max()))
            term["radicand"] = rad.convert_to<long long>();
        else
            term["radicand"] = rad.str();
        arr.push_back(std::move(term));
    }
    return arr;
}

inline RadicalSum radical_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "radical sum must be an array");
    RadicalSum out;
    for (const auto& term : j) {
        Rational coeff = rational_from_json(term.at("coeff"));
        const Json& rj = term.at("radicand");
        BigInt rad = rj.is_string() ? BigInt(rj.get<std::string>()) : BigInt(rj.get<long long>());
        out += RadicalSum::term(coeff, rad);
    }
    return out;
}

inline Json to_json(const WeightVector& w) { return Json(w.parts); }

inline WeightVector weights_from_json(const Json& j) {
    return WeightVector(j.get<std::vector<int>>());
}

inline Json to_json(const RationalPolynomial& p) {
    Json arr = Json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

inline RationalPolynomial polynomial_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return RationalPolynomial(std::move(coeffs));
}

// ---- code descriptor -----------------------------------------------------

inline Json to_json(const PICode& code) {
    Json j;
    j["q"] = code.q;
    j["N"] = code.N;
    j["d"] = code.d;
    j["t"] = code.t;
    j["construction"] = code.construction;
    j["f_coeffs"] = to_json(code.f);
    Json polys = Json::array();
    for (const auto& p : code.p_polys) polys.push_back(to_json(p));
    j["p_polys"] = std::move(polys);
    Json logical = Json::array();
    for (const auto& vec : code.logical) {
        Json lv = Json::array();
        for (const auto& term : vec) {
            Json t;
            t["weights"] = to_json(term.weight);
            t["amp"] = to_json(term.amplitude);
            lv.push_back(std::move(t));
        }
        logical.push_back(std::move(lv));
    }
    j["logical"] = std::move(logical);
    return j;
}

inline PICode code_from_json(const Json& j) {
    try {
        PICode code;
        code.q = j.at("q").get<int>();
        code.N = j.at("N").get<int>();
        code.d = j.at("d").get<int>();
        code.t = j.at("t").get<int>();
        code.construction = j.at("construction").get<std::string>();
        code.f = polynomial_from_json(j.at("f_coeffs"));
        for (const auto& p : j.at("p_polys")) code.p_polys.push_back(polynomial_from_json(p));
        for (const auto& lv : j.at("logical")) {
            LogicalVector vec;
            for (const auto& term : lv)
                vec.push_back({weights_from_json(term.at("weights")),
                               radical_from_json(term.at("amp"))});
            code.logical.push_back(std::move(vec));
        }
        if (static_cast<int>(code.logical.size()) != code.d)
            throw Error(ErrorKind::ParseError, "descriptor d does not match logical vector count");
        return code;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad code descriptor: ") + e.what());
    }
}

// ---- spec file -----------------------------------------------------------

struct SpecFile {
    CodeSpec spec;
    int t_check = 0;  // 0: use spec.t
};

inline Json to_json(const SpecFile& sf) {
    const CodeSpec& s = sf.spec;
    Json j;
    switch (s.construction) {
        case Construction::TypeA: j["construction"] = "TypeA"; break;
        case Construction::TypeB: j["construction"] = "TypeB"; break;
        case Construction::Theta: j["construction"] = "Theta"; break;
        case Construction::GNU: j["construction"] = "GNU"; break;
    }
    j["q"] = s.q;
    j["N"] = s.N;
    j["d"] = s.d;
    j["t"] = s.t;
    if (s.construction == Construction::GNU) {
        j["g"] = s.gnu_g;
        j["n"] = s.gnu_n;
    } else {
        j["m"] = s.m;
        if (s.construction == Construction::Theta)
            j["theta_sq"] = s.theta_sq.to_string();
        else
            j["f_coeffs"] = to_json(s.f);
        Json polys = Json::array();
        for (const auto& p : s.p.polys) polys.push_back(to_json(p));
        j["p_polys"] = std::move(polys);
    }
    if (sf.t_check) j["t_check"] = sf.t_check;
    return j;
}

inline SpecFile spec_from_json(const Json& j) {
    try {
        SpecFile sf;
        CodeSpec& s = sf.spec;
        std::string kind = j.at("construction").get<std::string>();
        if (kind == "TypeA")
            s.construction = Construction::TypeA;
        else if (kind == "TypeB")
            s.construction = Construction::TypeB;
        else if (kind == "Theta")
            s.construction = Construction::Theta;
        else if (kind == "GNU")
            s.construction = Construction::GNU;
        else
            throw Error(ErrorKind::ParseError, "unknown construction '" + kind + "'");
        s.q = j.at("q").get<int>();
        s.N = j.at("N").get<int>();
        s.t = j.at("t").get<int>();
        s.d = j.value("d", s.construction == Construction::TypeA ? 2 : 0);
        if (s.construction == Construction::GNU) {
            s.d = 2;
            s.gnu_g = j.at("g").get<int>();
            s.gnu_n = j.at("n").get<int>();
        } else {
            s.m = j.at("m").get<int>();
            if (s.construction == Construction::Theta)
                s.theta_sq = rational_from_json(j.at("theta_sq"));
            else
                s.f = polynomial_from_json(j.at("f_coeffs"));
            for (const auto& p : j.at("p_polys")) s.p.polys.push_back(polynomial_from_json(p));
            s.p.N = s.N;
            if (s.construction == Construction::Theta)
                s.p.range_end = s.m * (s.d - 1) + (s.theta_sq.is_zero() ? 0 : 1);
            else
                s.p.range_end = s.f.degree();
        }
        sf.t_check = j.value("t_check", 0);
        return sf;
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad spec file: ") + e.what());
    }
}

// ---- certificates and reports ---------------------------------------------

inline Json to_json(const MatrixUnitClass& cls) {
    Json j;
    j["a"] = to_json(cls.a);
    j["a_prime"] = to_json(cls.a_prime);
    return j;
}

inline Json to_json(const KLCertificate& cert) {
    Json j;
    j["ok"] = cert.ok;
    j["w"] = cert.w;
    Json violations = Json::array();
    for (const auto& v : cert.violations) {
        Json vj;
        vj["class"] = to_json(v.cls);
        vj["pair"] = Json::array({v.a, v.b});
        vj["value"] = to_json(v.value);
        violations.push_back(std::move(vj));
    }
    j["violations"] = std::move(violations);
    Json diag = Json::array();
    for (const auto& [cls, value] : cert.gram_diag) {
        Json dj;
        dj["class"] = to_json(cls);
        dj["value"] = to_json(value);
        diag.push_back(std::move(dj));
    }
    j["gram_diag"] = std::move(diag);
    return j;
}

inline Json to_json(const DistanceReport& rep) {
    Json j;
    j["w_max"] = rep.w_max;
    if (rep.violation_found) {
        j["distance"] = rep.distance;
        Json witnesses = Json::array();
        for (const auto& v : rep.witnesses) {
            Json vj;
            vj["class"] = to_json(v.cls);
            vj["pair"] = Json::array({v.a, v.b});
            vj["value"] = to_json(v.value);
            witnesses.push_back(std::move(vj));
        }
        j["witnesses"] = std::move(witnesses);
    } else {
        j["distance_greater_than"] = rep.w_max;
    }
    return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace picode

#endif
