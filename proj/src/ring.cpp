#include "zdg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace zdg {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

FiniteRing::Atom make_modular_atom(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("ring modulus must be at least 2");
  if (n > (1u << 20))
    throw std::invalid_argument("ring modulus too large (limit 2^20 elements per factor)");
  FiniteRing::Atom atom;
  atom.size = static_cast<Index>(n);
  atom.modular = true;
  atom.has_add = true;
  atom.zero = 0;
  atom.one = 1;
  atom.labels.reserve(n);
  atom.unit_mask.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    atom.labels.push_back(std::to_string(i));
    atom.unit_mask[i] = gcd_u64(i, n) == 1 ? 1 : 0;
  }
  const auto factors = factorize(n);
  atom.locality = factors.size() == 1 ? Locality::Local : Locality::NonLocal;
  return atom;
}

void compute_table_units(FiniteRing::Atom& atom) {
  const std::size_t n = static_cast<std::size_t>(atom.size);
  atom.unit_mask.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (atom.mul[x * n + y] == atom.one) {
        atom.unit_mask[x] = 1;
        break;
      }
    }
  }
}

// Axiom checks for table-backed atoms: exhaustive up to 512 elements,
// otherwise 10,000 seeded random triples.
void validate_table_atom(const FiniteRing::Atom& atom) {
  const std::size_t n = static_cast<std::size_t>(atom.size);
  auto mul = [&](std::size_t x, std::size_t y) { return atom.mul[x * n + y]; };
  auto name = [&](std::size_t x) { return atom.labels[x]; };

  if (atom.zero == atom.one) throw std::invalid_argument("table ring: zero equals one");
  for (std::size_t x = 0; x < n; ++x) {
    if (mul(atom.one, x) != x)
      throw std::invalid_argument("table ring: 1*" + name(x) + " != " + name(x));
    if (mul(atom.zero, x) != atom.zero)
      throw std::invalid_argument("table ring: 0*" + name(x) + " != 0");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (mul(x, y) != mul(y, x))
        throw std::invalid_argument("table ring: multiplication not commutative at (" + name(x) +
                                    ", " + name(y) + ")");

  auto assoc_violation = [&](std::size_t x, std::size_t y, std::size_t z) {
    return mul(mul(x, y), z) != mul(x, mul(y, z));
  };
  auto report_assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
    throw std::invalid_argument("table ring: multiplication not associative at (" + name(x) + ", " +
                                name(y) + ", " + name(z) + ")");
  };
  if (n <= 512) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (assoc_violation(x, y, z)) report_assoc(x, y, z);
  } else {
    std::mt19937_64 rng(kAxiomCheckSeed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t) {
      std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
      if (assoc_violation(x, y, z)) report_assoc(x, y, z);
    }
  }

  if (!atom.has_add) return;
  auto add = [&](std::size_t x, std::size_t y) { return atom.add[x * n + y]; };
  for (std::size_t x = 0; x < n; ++x) {
    if (add(atom.zero, x) != x)
      throw std::invalid_argument("table ring: 0+" + name(x) + " != " + name(x));
    bool has_negative = false;
    for (std::size_t y = 0; y < n; ++y)
      if (add(x, y) == atom.zero) has_negative = true;
    if (!has_negative)
      throw std::invalid_argument("table ring: no additive inverse for " + name(x));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (add(x, y) != add(y, x))
        throw std::invalid_argument("table ring: addition not commutative at (" + name(x) + ", " +
                                    name(y) + ")");
  auto add_assoc_violation = [&](std::size_t x, std::size_t y, std::size_t z) {
    return add(add(x, y), z) != add(x, add(y, z));
  };
  auto distrib_violation = [&](std::size_t x, std::size_t y, std::size_t z) {
    return mul(x, add(y, z)) != add(mul(x, y), mul(x, z));
  };
  auto report_add = [&](const char* what, std::size_t x, std::size_t y, std::size_t z) {
    throw std::invalid_argument(std::string("table ring: ") + what + " fails at (" + name(x) +
                                ", " + name(y) + ", " + name(z) + ")");
  };
  if (n <= 512) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          if (add_assoc_violation(x, y, z)) report_add("addition associativity", x, y, z);
          if (distrib_violation(x, y, z)) report_add("distributivity", x, y, z);
        }
  } else {
    std::mt19937_64 rng(kAxiomCheckSeed ^ 0x1);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t) {
      std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
      if (add_assoc_violation(x, y, z)) report_add("addition associativity", x, y, z);
      if (distrib_violation(x, y, z)) report_add("distributivity", x, y, z);
    }
  }
}

}  // namespace

FiniteRing::FiniteRing(std::vector<Atom> atoms, std::string spec_string)
    : atoms_(std::move(atoms)), spec_string_(std::move(spec_string)) {
  if (atoms_.empty()) throw std::invalid_argument("ring needs at least one factor");
  size_ = 1;
  for (const auto& a : atoms_) {
    if (a.size < 2) throw std::invalid_argument("ring factor must have at least 2 elements");
    if (size_ > (Index{1} << 22) / a.size)
      throw std::invalid_argument("product ring too large (limit 2^22 elements)");
    size_ *= a.size;
  }
  has_add_ = std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.has_add; });

  const std::size_t na = atoms_.size();
  components_.resize(static_cast<std::size_t>(size_) * na);
  labels_.resize(static_cast<std::size_t>(size_));
  unit_mask_.resize(static_cast<std::size_t>(size_));
  for (Index x = 0; x < size_; ++x) {
    Index rem = x;
    bool unit = true;
    for (std::size_t a = na; a-- > 0;) {
      const Index c = rem % atoms_[a].size;
      rem /= atoms_[a].size;
      components_[static_cast<std::size_t>(x) * na + a] = static_cast<std::uint32_t>(c);
      unit = unit && atoms_[a].unit_mask[static_cast<std::size_t>(c)];
    }
    unit_mask_[static_cast<std::size_t>(x)] = unit ? 1 : 0;
    if (na == 1) {
      labels_[static_cast<std::size_t>(x)] = atoms_[0].labels[static_cast<std::size_t>(x)];
    } else {
      std::string s = "(";
      for (std::size_t a = 0; a < na; ++a) {
        if (a) s += ",";
        s += atoms_[a].labels[components_[static_cast<std::size_t>(x) * na + a]];
      }
      s += ")";
      labels_[static_cast<std::size_t>(x)] = s;
    }
  }

  std::vector<Index> zero_c(na), one_c(na);
  for (std::size_t a = 0; a < na; ++a) {
    zero_c[a] = atoms_[a].zero;
    one_c[a] = atoms_[a].one;
  }
  zero_ = encode(zero_c);
  one_ = encode(one_c);

  Index nontrivial = static_cast<Index>(na);
  if (nontrivial >= 2) {
    locality_ = Locality::NonLocal;
  } else {
    locality_ = atoms_[0].locality;
  }
}

Index FiniteRing::mul(Index x, Index y) const {
  const std::size_t na = atoms_.size();
  const std::uint32_t* cx = &components_[static_cast<std::size_t>(x) * na];
  const std::uint32_t* cy = &components_[static_cast<std::size_t>(y) * na];
  Index out = 0;
  for (std::size_t a = 0; a < na; ++a) {
    const Atom& atom = atoms_[a];
    Index c;
    if (atom.modular) {
      c = static_cast<Index>((static_cast<std::uint64_t>(cx[a]) * cy[a]) %
                             static_cast<std::uint64_t>(atom.size));
    } else {
      c = atom.mul[static_cast<std::size_t>(cx[a]) * static_cast<std::size_t>(atom.size) + cy[a]];
    }
    out = out * atom.size + c;
  }
  return out;
}

Index FiniteRing::add(Index x, Index y) const {
  if (!has_add_) throw std::logic_error("ring has no addition table");
  const std::size_t na = atoms_.size();
  const std::uint32_t* cx = &components_[static_cast<std::size_t>(x) * na];
  const std::uint32_t* cy = &components_[static_cast<std::size_t>(y) * na];
  Index out = 0;
  for (std::size_t a = 0; a < na; ++a) {
    const Atom& atom = atoms_[a];
    Index c;
    if (atom.modular) {
      c = static_cast<Index>((static_cast<std::uint64_t>(cx[a]) + cy[a]) %
                             static_cast<std::uint64_t>(atom.size));
    } else {
      c = atom.add[static_cast<std::size_t>(cx[a]) * static_cast<std::size_t>(atom.size) + cy[a]];
    }
    out = out * atom.size + c;
  }
  return out;
}

bool FiniteRing::mul_is_zero(Index x, Index y) const {
  const std::size_t na = atoms_.size();
  const std::uint32_t* cx = &components_[static_cast<std::size_t>(x) * na];
  const std::uint32_t* cy = &components_[static_cast<std::size_t>(y) * na];
  for (std::size_t a = 0; a < na; ++a) {
    const Atom& atom = atoms_[a];
    if (atom.modular) {
      if ((static_cast<std::uint64_t>(cx[a]) * cy[a]) % static_cast<std::uint64_t>(atom.size) != 0)
        return false;
    } else {
      if (atom.mul[static_cast<std::size_t>(cx[a]) * static_cast<std::size_t>(atom.size) + cy[a]] !=
          atom.zero)
        return false;
    }
  }
  return true;
}

bool FiniteRing::is_unit(Index x) const { return unit_mask_[static_cast<std::size_t>(x)] != 0; }

bool FiniteRing::is_modular_product() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.modular; });
}

std::vector<std::uint64_t> FiniteRing::modular_moduli() const {
  std::vector<std::uint64_t> out;
  for (const auto& a : atoms_) {
    if (!a.modular) throw std::logic_error("ring has non-modular factors");
    out.push_back(static_cast<std::uint64_t>(a.size));
  }
  return out;
}

std::vector<Index> FiniteRing::decode(Index x) const {
  const std::size_t na = atoms_.size();
  std::vector<Index> out(na);
  for (std::size_t a = 0; a < na; ++a)
    out[a] = components_[static_cast<std::size_t>(x) * na + a];
  return out;
}

Index FiniteRing::encode(const std::vector<Index>& components) const {
  if (components.size() != atoms_.size())
    throw std::invalid_argument("encode: component count mismatch");
  Index out = 0;
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    if (components[a] < 0 || components[a] >= atoms_[a].size)
      throw std::invalid_argument("encode: component out of range");
    out = out * atoms_[a].size + components[a];
  }
  return out;
}

// --- parsing ------------------------------------------------------------

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume_keyword(const std::string& kw) {
    skip_ws();
    if (text.size() - pos < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(text[pos + i])) !=
          std::tolower(static_cast<unsigned char>(kw[i])))
        return false;
    }
    pos += kw.size();
    return true;
  }
  std::uint64_t parse_integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("ring spec: expected integer at position " + std::to_string(pos));
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (1ull << 40)) throw std::invalid_argument("ring spec: integer too large");
      ++pos;
    }
    return v;
  }
};

FactorSpec parse_factor(Cursor& cur) {
  FactorSpec f;
  if (cur.consume_keyword("table:")) {
    cur.skip_ws();
    std::string path;
    while (cur.pos < cur.text.size() && cur.text[cur.pos] != 'x' && cur.text[cur.pos] != 'X' &&
           !std::isspace(static_cast<unsigned char>(cur.text[cur.pos])))
      path += cur.text[cur.pos++];
    if (path.empty()) throw std::invalid_argument("ring spec: empty table path");
    f.kind = FactorSpec::Kind::Table;
    f.source = path;
    return f;
  }
  if (cur.consume_keyword("fixture:")) {
    if (!cur.consume_keyword("ex34"))
      throw std::invalid_argument("ring spec: unknown fixture (expected fixture:ex34)");
    f.kind = FactorSpec::Kind::Fixture;
    f.source = "ex34";
    return f;
  }
  if (cur.consume_keyword("Z")) {
    cur.skip_ws();
    std::uint64_t n;
    if (cur.peek() == '(') {
      ++cur.pos;
      const std::uint64_t base = cur.parse_integer();
      cur.skip_ws();
      if (cur.pos >= cur.text.size() || cur.text[cur.pos] != '^')
        throw std::invalid_argument("ring spec: expected '^' in Z(p^t)");
      ++cur.pos;
      const std::uint64_t exp = cur.parse_integer();
      if (exp == 0 || exp > 40) throw std::invalid_argument("ring spec: bad exponent in Z(p^t)");
      n = 1;
      for (std::uint64_t i = 0; i < exp; ++i) {
        n *= base;
        if (n > (1ull << 40)) throw std::invalid_argument("ring spec: modulus too large");
      }
      cur.skip_ws();
      if (cur.pos >= cur.text.size() || cur.text[cur.pos] != ')')
        throw std::invalid_argument("ring spec: expected ')' in Z(p^t)");
      ++cur.pos;
    } else {
      n = cur.parse_integer();
    }
    if (n < 2) throw std::invalid_argument("ring spec: modulus must be at least 2 (1 != 0)");
    f.kind = FactorSpec::Kind::Modular;
    f.modulus = n;
    return f;
  }
  throw std::invalid_argument("ring spec: expected factor at position " + std::to_string(cur.pos));
}

}  // namespace

RingDescriptor parse_ring_spec(const std::string& text) {
  Cursor cur{text};
  RingDescriptor d;
  d.spec_string = text;
  d.factors.push_back(parse_factor(cur));
  while (!cur.done()) {
    cur.skip_ws();
    if (cur.pos < cur.text.size() && (cur.text[cur.pos] == 'x' || cur.text[cur.pos] == 'X')) {
      ++cur.pos;
      d.factors.push_back(parse_factor(cur));
    } else {
      throw std::invalid_argument("ring spec: unexpected input at position " +
                                  std::to_string(cur.pos));
    }
  }
  return d;
}

FiniteRing build_ring(const RingDescriptor& descriptor) {
  if (descriptor.factors.empty()) throw std::invalid_argument("ring descriptor has no factors");
  std::vector<FiniteRing::Atom> atoms;
  atoms.reserve(descriptor.factors.size());
  for (const auto& f : descriptor.factors) {
    switch (f.kind) {
      case FactorSpec::Kind::Modular:
        atoms.push_back(make_modular_atom(f.modulus));
        break;
      case FactorSpec::Kind::Table: {
        FiniteRing table = load_table_ring(f.source);
        atoms.push_back(table.atom(0));
        break;
      }
      case FactorSpec::Kind::Fixture: {
        FiniteRing fx = fixture_ex34();
        atoms.push_back(fx.atom(0));
        break;
      }
    }
  }
  return FiniteRing(std::move(atoms), descriptor.spec_string);
}

// --- table rings ----------------------------------------------------------

FiniteRing parse_table_ring_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FiniteRing::Atom atom;
  const std::uint64_t n = j.at("size").get<std::uint64_t>();
  if (n < 2 || n > (1u << 16)) throw std::invalid_argument("table ring: bad size");
  atom.size = static_cast<Index>(n);
  atom.modular = false;
  atom.zero = j.at("zero").get<std::uint32_t>();
  atom.one = j.at("one").get<std::uint32_t>();
  if (atom.zero >= n || atom.one >= n)
    throw std::invalid_argument("table ring: zero/one out of range");
  if (j.contains("labels")) {
    atom.labels = j.at("labels").get<std::vector<std::string>>();
    if (atom.labels.size() != n) throw std::invalid_argument("table ring: label count mismatch");
  } else {
    for (std::uint64_t i = 0; i < n; ++i) atom.labels.push_back("e" + std::to_string(i));
  }
  auto read_table = [&](const nlohmann::json& rows, const char* what) {
    if (!rows.is_array() || rows.size() != n)
      throw std::invalid_argument(std::string("table ring: ") + what + " must be an n*n array");
    std::vector<std::uint32_t> table;
    table.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n)
        throw std::invalid_argument(std::string("table ring: ") + what + " row size mismatch");
      for (const auto& v : row) {
        const std::uint64_t e = v.get<std::uint64_t>();
        if (e >= n) throw std::invalid_argument(std::string("table ring: ") + what +
                                                " entry out of range");
        table.push_back(static_cast<std::uint32_t>(e));
      }
    }
    return table;
  };
  atom.mul = read_table(j.at("mul"), "mul");
  if (j.contains("add")) {
    atom.add = read_table(j.at("add"), "add");
    atom.has_add = true;
  }
  validate_table_atom(atom);
  compute_table_units(atom);
  atom.locality = Locality::Unknown;
  return FiniteRing({std::move(atom)}, "table");
}

FiniteRing load_table_ring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table ring file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_table_ring_json(buf.str());
}

std::string table_ring_to_json(const FiniteRing& ring) {
  nlohmann::json j;
  const Index n = ring.size();
  j["size"] = n;
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back(ring.label(i));
  j["labels"] = labels;
  j["zero"] = ring.zero();
  j["one"] = ring.one();
  nlohmann::json mul = nlohmann::json::array();
  for (Index x = 0; x < n; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (Index y = 0; y < n; ++y) row.push_back(ring.mul(x, y));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  if (ring.has_addition()) {
    nlohmann::json addt = nlohmann::json::array();
    for (Index x = 0; x < n; ++x) {
      nlohmann::json row = nlohmann::json::array();
      for (Index y = 0; y < n; ++y) row.push_back(ring.add(x, y));
      addt.push_back(std::move(row));
    }
    j["add"] = std::move(addt);
  }
  return j.dump();
}

FiniteRing fixture_ex34() {
  // Elements (a,b,c,d) <-> a + bX + cY + dX^2 over Z_3, row-major index.
  constexpr int kN = 81;
  auto idx = [](int a, int b, int c, int d) { return ((a * 3 + b) * 3 + c) * 3 + d; };
  FiniteRing::Atom atom;
  atom.size = kN;
  atom.modular = false;
  atom.has_add = true;
  atom.zero = 0;
  atom.one = static_cast<std::uint32_t>(idx(1, 0, 0, 0));
  atom.mul.resize(kN * kN);
  atom.add.resize(kN * kN);
  atom.labels.resize(kN);
  auto term = [](std::string& s, int coeff, const char* sym) {
    if (coeff == 0) return;
    if (!s.empty()) s += "+";
    if (coeff != 1 || *sym == '\0') s += std::to_string(coeff);
    s += sym;
  };
  for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 3; ++b1)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int d1 = 0; d1 < 3; ++d1) {
          const int x = idx(a1, b1, c1, d1);
          std::string label;
          term(label, a1, "");
          term(label, b1, "X");
          term(label, c1, "Y");
          term(label, d1, "X^2");
          atom.labels[static_cast<std::size_t>(x)] = label.empty() ? "0" : label;
          for (int a2 = 0; a2 < 3; ++a2)
            for (int b2 = 0; b2 < 3; ++b2)
              for (int c2 = 0; c2 < 3; ++c2)
                for (int d2 = 0; d2 < 3; ++d2) {
                  const int y = idx(a2, b2, c2, d2);
                  const int pa = (a1 * a2) % 3;
                  const int pb = (a1 * b2 + a2 * b1) % 3;
                  const int pc = (a1 * c2 + a2 * c1) % 3;
                  const int pd = (a1 * d2 + a2 * d1 + b1 * b2 + c1 * c2) % 3;
                  atom.mul[static_cast<std::size_t>(x) * kN + y] =
                      static_cast<std::uint32_t>(idx(pa, pb, pc, pd));
                  atom.add[static_cast<std::size_t>(x) * kN + y] = static_cast<std::uint32_t>(
                      idx((a1 + a2) % 3, (b1 + b2) % 3, (c1 + c2) % 3, (d1 + d2) % 3));
                }
        }
  validate_table_atom(atom);
  compute_table_units(atom);
  atom.locality = Locality::Unknown;
  return FiniteRing({std::move(atom)}, "fixture:ex34");
}

// --- element sets -----------------------------------------------------------

std::vector<Index> units(const FiniteRing& ring) {
  std::vector<Index> out;
  for (Index x = 0; x < ring.size(); ++x)
    if (ring.is_unit(x)) out.push_back(x);
  return out;
}

std::vector<Index> zero_divisors(const FiniteRing& ring) {
  std::vector<Index> out;
  for (Index x = 0; x < ring.size(); ++x)
    if (x != ring.zero() && !ring.is_unit(x)) out.push_back(x);
  return out;
}

std::vector<Index> annihilator(const FiniteRing& ring, Index x) {
  std::vector<Index> out;
  for (Index y = 0; y < ring.size(); ++y)
    if (ring.mul_is_zero(x, y)) out.push_back(y);
  return out;
}

std::vector<AnnClass> ann_classes(const FiniteRing& ring) {
  const Index n = ring.size();
  std::vector<AnnClass> classes;

  // [0] and [1] are forced: ann(0) = R, ann(unit) = {0}. For any other x the
  // annihilator sits inside {0} plus the zero-divisors, so the partition only
  // needs bitsets over that smaller carrier set.
  {
    AnnClass zero_class;
    zero_class.representative = ring.zero();
    zero_class.members.push_back(ring.zero());
    zero_class.annihilator.resize(static_cast<std::size_t>(n));
    std::iota(zero_class.annihilator.begin(), zero_class.annihilator.end(), Index{0});
    classes.push_back(std::move(zero_class));
  }
  {
    AnnClass unit_class;
    unit_class.members = units(ring);
    unit_class.representative = unit_class.members.front();
    unit_class.annihilator.push_back(ring.zero());
    classes.push_back(std::move(unit_class));
  }

  std::vector<Index> carrier = zero_divisors(ring);
  carrier.push_back(ring.zero());
  std::sort(carrier.begin(), carrier.end());
  const std::size_t words = (carrier.size() + 63) / 64;

  std::vector<std::vector<std::uint64_t>> class_bits;
  std::vector<std::size_t> class_index;  // into `classes`
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
  std::vector<std::uint64_t> bits(words);
  for (Index x : zero_divisors(ring)) {
    std::fill(bits.begin(), bits.end(), 0);
    std::uint64_t hash = 1469598103934665603ull;
    for (std::size_t yi = 0; yi < carrier.size(); ++yi) {
      if (ring.mul_is_zero(x, carrier[yi])) bits[yi >> 6] |= (1ull << (yi & 63));
    }
    for (std::size_t w = 0; w < words; ++w) {
      hash ^= bits[w];
      hash *= 1099511628211ull;
    }
    bool found = false;
    for (std::size_t k : by_hash[hash]) {
      if (class_bits[k] == bits) {
        classes[class_index[k]].members.push_back(x);
        found = true;
        break;
      }
    }
    if (!found) {
      by_hash[hash].push_back(class_bits.size());
      class_bits.push_back(bits);
      class_index.push_back(classes.size());
      AnnClass ac;
      ac.representative = x;
      ac.members.push_back(x);
      for (std::size_t yi = 0; yi < carrier.size(); ++yi)
        if (bits[yi >> 6] & (1ull << (yi & 63))) ac.annihilator.push_back(carrier[yi]);
      classes.push_back(std::move(ac));
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const AnnClass& a, const AnnClass& b) { return a.members.front() < b.members.front(); });
  for (auto& c : classes) c.representative = c.members.front();
  return classes;
}

Ternary is_local(const FiniteRing& ring) {
  switch (ring.known_locality()) {
    case Locality::Local:
      return Ternary::Yes;
    case Locality::NonLocal:
      return Ternary::No;
    case Locality::Unknown:
      break;
  }
  if (!ring.has_addition()) return Ternary::Unknown;
  // Local iff the nonunits form an ideal; with multiplication absorbing into
  // nonunits automatically, closure under addition is the whole test.
  std::vector<Index> nonunits;
  for (Index x = 0; x < ring.size(); ++x)
    if (!ring.is_unit(x)) nonunits.push_back(x);
  for (Index x : nonunits)
    for (Index y : nonunits)
      if (ring.is_unit(ring.add(x, y))) return Ternary::No;
  return Ternary::Yes;
}

// --- number theory ----------------------------------------------------------

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi(0)");
  std::uint64_t result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace zdg
