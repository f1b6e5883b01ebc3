#include "mtk/groups.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "mtk/error.hpp"

namespace mtk {

namespace {

void fail(const GroupData& g, const std::string& what) {
  throw InvariantError("group " + g.name + ": " + what);
}

std::vector<std::vector<int>> classes_of_subgroup(const GroupData& g, const std::vector<int>& sub) {
  std::set<int> seen;
  std::vector<std::vector<int>> out;
  for (int x : sub) {
    if (seen.count(x)) continue;
    std::set<int> cls;
    for (int h : sub) cls.insert(g.conjugate(h, x));
    seen.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

}  // namespace

std::string GroupData::class_name(std::size_t c) const {
  const int rep = classes.at(c).front();
  if (static_cast<std::size_t>(rep) < element_names.size()) return element_names[static_cast<std::size_t>(rep)];
  return std::to_string(rep);
}

GroupData make_group(std::string name, std::vector<std::string> element_names, std::vector<std::vector<int>> mult,
                     std::vector<std::vector<int>> classes, std::vector<CharacterTable> char_tables) {
  GroupData g;
  g.name = std::move(name);
  g.element_names = std::move(element_names);
  g.mult = std::move(mult);
  g.classes = std::move(classes);
  g.char_tables = std::move(char_tables);
  const int n = g.order();
  if (n == 0) fail(g, "empty multiplication table");
  for (const auto& row : g.mult) {
    if (static_cast<int>(row.size()) != n) fail(g, "multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= n) fail(g, "multiplication table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (g.mult[0][a] != a || g.mult[a][0] != a) fail(g, "element 0 is not the identity");
  g.inverse.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mult[a][b] == 0) g.inverse[a] = b;
    if (g.inverse[a] < 0 || g.mult[g.inverse[a]][a] != 0) fail(g, "element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]]) fail(g, "multiplication is not associative");

  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::size_t total = 0;
  for (const auto& cls : g.classes) {
    if (cls.empty()) fail(g, "empty conjugacy class");
    std::set<int> orbit;
    for (int h = 0; h < n; ++h) orbit.insert(g.conjugate(h, cls.front()));
    if (orbit != std::set<int>(cls.begin(), cls.end())) fail(g, "class of " + std::to_string(cls.front()) + " is not a conjugacy class");
    for (int x : cls) seen[x]++;
    total += cls.size();
  }
  if (total != static_cast<std::size_t>(n) || std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    fail(g, "class equation fails: classes do not partition the group");
  if (g.classes.front() != std::vector<int>{0}) fail(g, "class 0 must be the identity class");
  if (g.char_tables.size() != g.classes.size()) fail(g, "one character table per class is required");

  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    const int a = g.classes[c].front();
    std::vector<int> cent;
    for (int x = 0; x < n; ++x)
      if (g.mult[a][x] == g.mult[x][a]) cent.push_back(x);
    g.centralizers.push_back(cent);
    const auto& table = g.char_tables[c];
    const auto sub_classes = classes_of_subgroup(g, cent);
    if (table.values.size() != sub_classes.size())
      fail(g, "character table of the centralizer of class " + std::to_string(c) + " is not square");
    if (!table.names.empty() && table.names.size() != table.values.size())
      fail(g, "irrep names do not match the character table");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < cent.size(); ++i) pos[cent[i]] = static_cast<int>(i);
    for (std::size_t r = 0; r < table.values.size(); ++r) {
      const auto& chi = table.values[r];
      if (chi.size() != cent.size()) fail(g, "character row length differs from the centralizer order");
      const auto deg = chi[0].as_rational();
      if (!deg || deg->get_den() != 1 || *deg <= 0) fail(g, "character degree is not a positive integer");
      if (r == 0)
        for (const auto& v : chi)
          if (!(v == CycloNum(1))) fail(g, "irrep 0 must be the trivial character");
      for (std::size_t s = 0; s < table.values.size(); ++s) {
        CycloNum ip(0);
        for (std::size_t x = 0; x < cent.size(); ++x) ip += chi[x] * table.values[s][x].conj();
        ip = ip * CycloNum(Rational(1, static_cast<long>(cent.size())));
        if (!(ip == CycloNum(r == s ? 1 : 0)))
          fail(g, "characters " + std::to_string(r) + "," + std::to_string(s) + " of class " + std::to_string(c) +
                      " are not orthonormal");
      }
      for (const auto& sc : sub_classes)
        for (int x : sc)
          if (!(chi[pos[x]] == chi[pos[sc.front()]])) fail(g, "character is not a class function");
    }
  }
  return g;
}

GroupData cyclic_group(int n) {
  if (n < 1) throw UsageError("cyclic group order must be positive");
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> names;
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    classes.push_back({a});
    for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  }
  CharacterTable table;
  for (int k = 0; k < n; ++k) {
    table.names.push_back(std::to_string(k));
    std::vector<CycloNum> row;
    for (int a = 0; a < n; ++a) row.push_back(RootOfUnity(static_cast<std::int64_t>(k) * a, n).to_cyclo());
    table.values.push_back(row);
  }
  std::vector<CharacterTable> tables(static_cast<std::size_t>(n), table);
  return make_group("Z" + std::to_string(n), names, mult, classes, tables);
}

GroupData symmetric_group_3() {
  // Elements as images of (0,1,2); the identity comes first.
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
  const int n = 6;
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      mult[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  const std::vector<std::vector<int>> classes = {{0}, {1, 2, 3}, {4, 5}};

  CharacterTable full;
  full.names = {"triv", "sign", "std"};
  std::vector<CycloNum> triv, sign, std2;
  for (int g = 0; g < n; ++g) {
    int fixed = 0;
    for (int i = 0; i < 3; ++i) fixed += perms[g][i] == i;
    const bool odd = g >= 1 && g <= 3;
    triv.emplace_back(1);
    sign.emplace_back(odd ? -1 : 1);
    std2.emplace_back(fixed - 1);
  }
  full.values = {triv, sign, std2};

  // Centralizer of (01) is {e, (01)}.
  CharacterTable c2;
  c2.names = {"+", "-"};
  c2.values = {{CycloNum(1), CycloNum(1)}, {CycloNum(1), CycloNum(-1)}};

  // Centralizer of (012) is {e, (012), (021)}, with (021) = (012)^2.
  CharacterTable c3;
  c3.names = {"1", "w", "w2"};
  for (int k = 0; k < 3; ++k)
    c3.values.push_back({CycloNum(1), RootOfUnity(k, 3).to_cyclo(), RootOfUnity(2 * k, 3).to_cyclo()});

  return make_group("S3", names, mult, classes, {full, c2, c3});
}

GroupData builtin_group(const std::string& name) {
  if (name == "S3") return symmetric_group_3();
  if (name == "trivial") return cyclic_group(1);
  std::string digits;
  if (name.rfind("Zn:", 0) == 0) digits = name.substr(3);
  else if (name.size() > 1 && name[0] == 'Z') digits = name.substr(1);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
      digits.size() < 7)
    return cyclic_group(std::stoi(digits));
  throw UsageError("unknown group '" + name + "' (built-ins: Z<n>, Zn:<n>, S3, trivial)");
}

}  // namespace mtk
