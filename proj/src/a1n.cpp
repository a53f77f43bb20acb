#include "tgwa/a1n.hpp"

#include <regex>
#include <sstream>

#include "tgwa/error.hpp"
#include "tgwa/expr.hpp"

namespace tgwa {

A1nProfile::A1nProfile(TGWDatum d, Mat gamma) : d_(std::move(d)), gamma_(std::move(gamma)) {
  const size_t n = d_.rank();
  pp_ = mm_ = mp_ = identity_matrix(n);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      pp_[j][k] = gamma_[j][k] / d_.mu[j][k];
      mm_[j][k] = gamma_[k][j] / d_.mu[j][k];
      mp_[j][k] = d_.mu[k][j].inverse();
    }
}

const RingAut& A1nProfile::sigma_power(const Degree& d) const {
  auto it = pow_cache_.find(d);
  if (it != pow_cache_.end()) return it->second;
  return pow_cache_.emplace(d, d_.sigma_power(d)).first->second;
}

BasePoly A1nProfile::sigma_apply(const Degree& d, const BasePoly& f) const {
  bool zero = true;
  for (int v : d) zero = zero && v == 0;
  if (zero || f.is_constant()) return f;
  std::lock_guard<std::mutex> lock(mu_);
  return sigma_power(d).apply(f);
}

const BasePoly& A1nProfile::shifted_t(size_t k, const Degree& d) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(k, d);
  auto it = t_cache_.find(key);
  if (it != t_cache_.end()) return it->second;
  BasePoly v = sigma_power(d).apply(d_.t[k]);
  return t_cache_.emplace(key, std::move(v)).first->second;
}

ProfilePtr from_datum(const TGWDatum& d, int bound) {
  CartanReport rep = cartan_type(d, bound);
  if (rep.tag != TypeTag::A1n)
    throw Error(ErrorKind::NotTypeA1n, std::string("datum has type tag ") + type_tag_name(rep.tag));
  for (size_t i = 0; i < d.rank(); ++i)
    for (size_t j = 0; j < d.rank(); ++j)
      if (i != j && d.sigma[i].apply(d.t[j]) != d.t[j] * rep.gamma[i][j])
        throw Error(ErrorKind::NotTypeA1n, "sigma_i(t_j) is not a multiple of t_j");
  return std::make_shared<const A1nProfile>(d, rep.gamma);
}

namespace {

// Z^d * X_k^sign = coef * Z^{d'}; d updated in place.
void right_letter(const A1nProfile& p, Degree& d, size_t k, int sign, BasePoly& coef) {
  const size_t n = d.size();
  Scalar s(1);
  if (sign > 0) {
    if (d[k] >= 0) {
      for (size_t j = k + 1; j < n; ++j)
        if (d[j] > 0) s *= p.plus_swap(j, k).pow(d[j]);
      d[k] += 1;
      coef *= s;
      return;
    }
    for (size_t j = 0; j < n; ++j)
      if (j != k && d[j] > 0) s *= p.plus_swap(j, k).pow(d[j]);
    for (size_t j = k + 1; j < n; ++j)
      if (d[j] < 0) s *= p.minus_plus(j, k).pow(-d[j]);
    Degree w(n, 0);
    for (size_t j = 0; j < k; ++j)
      if (d[j] < 0) w[j] = d[j];
    w[k] = d[k] + 1;
    d[k] += 1;
    coef = coef * p.shifted_t(k, w);
    coef *= s;
    return;
  }
  if (d[k] <= 0) {
    for (size_t j = 0; j < n; ++j)
      if (d[j] > 0) s *= p.plus_minus(j, k).pow(d[j]);
    for (size_t j = k + 1; j < n; ++j)
      if (d[j] < 0) s *= p.minus_swap(j, k).pow(-d[j]);
    d[k] -= 1;
    coef *= s;
    return;
  }
  for (size_t j = k + 1; j < n; ++j)
    if (d[j] > 0) s *= p.plus_minus(j, k).pow(d[j]);
  Degree w(n, 0);
  for (size_t j = 0; j < n; ++j)
    if (d[j] < 0 || j < k) w[j] = d[j];
  w[k] = d[k];  // (d_k - 1) from the prefix, plus one for sigma_k(t_k)
  d[k] -= 1;
  coef = coef * p.shifted_t(k, w);
  coef *= s;
}

}  // namespace

AlgebraElement AlgebraElement::from_ring(ProfilePtr p, const BasePoly& r) {
  size_t n = p->rank();
  return monomial(std::move(p), Degree(n, 0), r);
}

AlgebraElement AlgebraElement::monomial(ProfilePtr p, Degree d, const BasePoly& r) {
  if (d.size() != p->rank()) throw Error(ErrorKind::InvalidArgument, "degree length mismatch");
  AlgebraElement x(std::move(p));
  x.add(d, r);
  return x;
}

AlgebraElement AlgebraElement::generator(ProfilePtr p, size_t i, int sign) {
  Degree d(p->rank(), 0);
  d.at(i) = sign > 0 ? 1 : -1;
  RingPtr r = p->ring();
  return monomial(std::move(p), d, BasePoly::constant(r, Scalar(1)));
}

void AlgebraElement::add(const Degree& d, const BasePoly& r) {
  if (r.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, r);
    return;
  }
  it->second += r;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement x = *this;
  for (auto& [d, r] : x.terms_) r = -r;
  return x;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (p_ != o.p_) throw Error(ErrorKind::ProfileMismatch, "elements of different algebras");
  for (const auto& [d, r] : o.terms_) add(d, r);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement operator*(const Scalar& s, AlgebraElement a) {
  if (s.is_zero()) a.terms_.clear();
  for (auto& [d, r] : a.terms_) r *= s;
  return a;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::ProfileMismatch, "elements of different algebras");
  const A1nProfile& p = *a.p_;
  const size_t n = p.rank();
  AlgebraElement out(a.p_);
  for (const auto& [d, r] : a.terms_)
    for (const auto& [e, s] : b.terms_) {
      BasePoly coef = r * p.sigma_apply(d, s);
      Degree deg = d;
      for (size_t i = 0; i < n; ++i)
        for (int c = 0; c < -e[i]; ++c) right_letter(p, deg, i, -1, coef);
      for (size_t i = 0; i < n; ++i)
        for (int c = 0; c < e[i]; ++c) right_letter(p, deg, i, 1, coef);
      out.add(deg, coef);
    }
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement AlgebraElement::pow(int k) const {
  AlgebraElement r = from_ring(p_, BasePoly::constant(p_->ring(), Scalar(1)));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  if (p_ != o.p_) throw Error(ErrorKind::ProfileMismatch, "elements of different algebras");
  return terms_ == o.terms_;
}

namespace {

std::string letter_name(size_t i, int sign, size_t rank) {
  std::string s = "X";
  if (rank > 1) s += std::to_string(i + 1);
  return s + (sign > 0 ? "+" : "-");
}

}  // namespace

std::string monomial_word(const Degree& d, size_t rank) {
  std::string s;
  auto put = [&](size_t i, int sign, int k) {
    if (!s.empty()) s += "*";
    s += letter_name(i, sign, rank);
    if (k > 1) s += "^" + std::to_string(k);
  };
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] < 0) put(i, -1, -d[i]);
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0) put(i, 1, d[i]);
  return s;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, r] : terms_) {
    std::string w = monomial_word(d, p_->rank());
    std::string c = r.str();
    std::string term;
    if (w.empty()) term = c;
    else if (c == "1") term = w;
    else if (c == "-1") term = "-" + w;
    else if (r.terms().size() == 1 && r.is_constant()) term = c + "*" + w;
    else term = "(" + c + ")*" + w;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

Token letter(size_t i, int sign) { return Token{true, static_cast<int>(i), sign, BasePoly()}; }

Token ring_token(const BasePoly& r) { return Token{false, 0, 1, r}; }

AlgebraElement normal_form(const ProfilePtr& p, const std::vector<Token>& word) {
  AlgebraElement acc = AlgebraElement::from_ring(p, BasePoly::constant(p->ring(), Scalar(1)));
  for (const auto& tok : word) {
    if (tok.letter) acc = acc * AlgebraElement::generator(p, tok.index, tok.sign);
    else acc = acc * AlgebraElement::from_ring(p, tok.r);
  }
  return acc;
}

std::vector<Token> parse_word(const ProfilePtr& p, const std::string& text) {
  static const std::regex letter_re(R"(X(\d*)([+-])(?:\^(\d+))?)");
  std::vector<Token> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::smatch m;
    if (std::regex_match(tok, m, letter_re)) {
      size_t i = m[1].str().empty() ? 1 : std::stoul(m[1].str());
      if (m[1].str().empty() && p->rank() != 1)
        throw Error(ErrorKind::SyntaxError, "letter '" + tok + "' needs an index in rank " + std::to_string(p->rank()));
      if (i < 1 || i > p->rank()) throw Error(ErrorKind::SyntaxError, "letter index out of range in '" + tok + "'");
      int sign = m[2].str() == "+" ? 1 : -1;
      int k = m[3].matched ? std::stoi(m[3].str()) : 1;
      for (int c = 0; c < k; ++c) out.push_back(letter(i - 1, sign));
    } else {
      out.push_back(ring_token(parse_poly(tok, p->ring())));
    }
  }
  return out;
}

std::string word_str(const std::vector<Token>& word, size_t rank) {
  std::string s;
  for (const auto& t : word) {
    if (!s.empty()) s += " ";
    s += t.letter ? letter_name(t.index, t.sign, rank) : "(" + t.r.str() + ")";
  }
  return s;
}

AlgebraElement phi_action(const AlgebraElement& x, const DiagonalAut& a) {
  AlgebraElement out(x.profile());
  for (const auto& [d, r] : x.terms()) {
    Scalar s(1);
    for (size_t i = 0; i < d.size(); ++i)
      if (d[i]) s *= a.alpha[i].pow(d[i]);
    out += AlgebraElement::monomial(x.profile(), d, a.phiR.apply(r) * s);
  }
  return out;
}

std::vector<std::string> diamond_check(const ProfilePtr& p) {
  const size_t n = p->rank();
  std::vector<Token> letters;
  for (size_t i = 0; i < n; ++i) {
    letters.push_back(letter(i, 1));
    letters.push_back(letter(i, -1));
  }
  const TGWDatum& d = p->datum();
  std::vector<std::string> bad;
  for (const auto& a : letters)
    for (const auto& b : letters)
      for (const auto& c : letters) {
        std::vector<Token> w{a, b, c};
        AlgebraElement expect = normal_form(p, w);
        for (size_t pos = 0; pos < 2; ++pos) {
          const Token &x = w[pos], &y = w[pos + 1];
          std::vector<Token> nw(w.begin(), w.begin() + pos);
          if (x.index == y.index) {
            if (x.sign == y.sign) continue;
            BasePoly r = x.sign < 0 ? d.t[x.index] : d.sigma[x.index].apply(d.t[x.index]);
            nw.push_back(ring_token(r));
          } else {
            size_t j = x.index, k = y.index;
            Scalar f = x.sign > 0 ? (y.sign > 0 ? p->plus_swap(j, k) : p->plus_minus(j, k))
                                  : (y.sign > 0 ? p->minus_plus(j, k) : p->minus_swap(j, k));
            nw.push_back(ring_token(BasePoly::constant(p->ring(), f)));
            nw.push_back(y);
            nw.push_back(x);
          }
          nw.insert(nw.end(), w.begin() + pos + 2, w.end());
          if (normal_form(p, nw) != expect) bad.push_back(word_str(w, n) + " @" + std::to_string(pos));
        }
      }
  return bad;
}

bool OrePresentation::verified() const {
  for (const auto& r : relations)
    if (!r.holds()) return false;
  return true;
}

OrePresentation ore_presentation(const ProfilePtr& p) {
  const size_t n = p->rank();
  const TGWDatum& d = p->datum();
  const RingPtr& R = p->ring();
  const Mat& g = p->gamma();
  OrePresentation out;
  auto gen = [&](size_t i, int s) { return AlgebraElement::generator(p, i, s); };
  auto ring_el = [&](const BasePoly& r) { return AlgebraElement::from_ring(p, r); };
  auto scal = [&](const Scalar& s) { return ring_el(BasePoly::constant(R, s)); };
  auto name = [&](size_t i, int s) { return letter_name(i, s, n); };

  for (size_t i = 0; i < n; ++i) {
    OreStep st{name(i, 1), d.sigma[i].str(), {}};
    for (size_t l = 0; l < R->nvars(); ++l) {
      BasePoly h = BasePoly::variable(R, l);
      out.relations.push_back({name(i, 1) + " " + R->vars[l], gen(i, 1) * ring_el(h),
                               ring_el(d.sigma[i].apply(h)) * gen(i, 1)});
    }
    for (size_t j = 0; j < i; ++j) {
      Scalar f = g[i][j] / d.mu[i][j];
      st.extension.emplace_back(name(j, 1), f.str() + "*" + name(j, 1), "0");
      out.relations.push_back({name(i, 1) + " " + name(j, 1), gen(i, 1) * gen(j, 1), scal(f) * gen(j, 1) * gen(i, 1)});
    }
    out.plus_steps.push_back(std::move(st));
  }

  for (size_t i = 0; i < n; ++i) {
    OreStep st{name(i, -1), d.sigma[i].inverse().str(), {}};
    for (size_t l = 0; l < R->nvars(); ++l) {
      BasePoly h = BasePoly::variable(R, l);
      out.relations.push_back({name(i, -1) + " " + R->vars[l], gen(i, -1) * ring_el(h),
                               ring_el(d.sigma[i].inverse().apply(h)) * gen(i, -1)});
    }
    for (size_t j = 0; j < n; ++j) {
      if (j == i) {
        BasePoly delta = d.t[i] - d.sigma[i].apply(d.t[i]);
        st.extension.emplace_back(name(i, 1), name(i, 1), delta.str());
        out.relations.push_back({name(i, -1) + " " + name(i, 1), gen(i, -1) * gen(i, 1),
                                 gen(i, 1) * gen(i, -1) + ring_el(delta)});
        continue;
      }
      Scalar f = d.mu[j][i].inverse();
      st.extension.emplace_back(name(j, 1), f.str() + "*" + name(j, 1), "0");
      out.relations.push_back({name(i, -1) + " " + name(j, 1), gen(i, -1) * gen(j, 1), scal(f) * gen(j, 1) * gen(i, -1)});
    }
    for (size_t j = 0; j < i; ++j) {
      Scalar f = d.mu[j][i] / g[i][j];
      st.extension.emplace_back(name(j, -1), f.str() + "*" + name(j, -1), "0");
      out.relations.push_back({name(i, -1) + " " + name(j, -1), gen(i, -1) * gen(j, -1),
                               scal(f) * gen(j, -1) * gen(i, -1)});
    }
    out.minus_steps.push_back(std::move(st));
  }
  for (size_t i = 0; i < n; ++i) {
    out.quotient_relations.push_back(name(i, -1) + "*" + name(i, 1) + " - (" + d.t[i].str() + ")");
    out.relations.push_back({"quotient " + name(i, -1) + " " + name(i, 1), gen(i, -1) * gen(i, 1), ring_el(d.t[i])});
  }
  return out;
}

}  // namespace tgwa
