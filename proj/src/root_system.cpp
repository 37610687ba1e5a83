#include "chev/root_system.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace chev {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'D': return Family::D;
    case 'E': return Family::E;
    default: throw UnsupportedType(std::string("family '") + c + "' (supported: A, D, E)");
  }
}

std::string to_string(const Root& r) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < r.c.size(); ++i) out << (i ? "," : "") << r.c[i];
  out << ")";
  return out.str();
}

namespace {

// Dynkin diagram edges in Bourbaki numbering (1-based nodes).
std::vector<std::pair<int, int>> diagram_edges(Family fam, int l) {
  std::vector<std::pair<int, int>> e;
  switch (fam) {
    case Family::A:
      for (int i = 1; i < l; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      // chain 1..l-1 with node l attached to the branch node l-2
      for (int i = 1; i < l - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(l - 2, l);
      break;
    case Family::E:
      // chain 1-3-4-5-...-l with node 2 attached to node 4
      e.emplace_back(1, 3);
      for (int i = 3; i < l; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(2, 4);
      break;
  }
  return e;
}

bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

RootSystem RootSystem::build(Family fam, int rank) {
  bool ok = (fam == Family::A && rank >= 2 && rank <= 16) ||
            (fam == Family::D && rank >= 4 && rank <= 16) ||
            (fam == Family::E && rank >= 6 && rank <= 8);
  if (!ok)
    throw UnsupportedType(std::string(1, static_cast<char>(fam)) + "_" + std::to_string(rank) +
                          " is outside the supported A/D/E ranges");
  RootSystem rs;
  rs.fam_ = fam;
  rs.l_ = rank;
  rs.cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) rs.cartan_[i][i] = 2;
  for (auto [i, j] : diagram_edges(fam, rank)) {
    rs.cartan_[i - 1][j - 1] = -1;
    rs.cartan_[j - 1][i - 1] = -1;
  }

  // Closure from the simple roots: in a simply-laced system the alpha-string
  // through beta has length <= 2, so beta + alpha_i is a root exactly when
  // <beta, alpha_i> = -1.
  std::map<std::vector<int>, bool> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    seen[c] = true;
    queue.push_back(c);
  }
  auto pair_with_simple = [&](const std::vector<int>& c, int i) {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += c[j] * rs.cartan_[j][i];
    return s;
  };
  while (!queue.empty()) {
    std::vector<int> c = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      if (pair_with_simple(c, i) != -1) continue;
      std::vector<int> d = c;
      d[i] += 1;
      if (!seen.emplace(d, true).second) continue;
      queue.push_back(d);
    }
  }

  for (auto& [c, flag] : seen) {
    Root r{fam, rank, c};
    rs.pos_.push_back(std::move(r));
  }
  std::sort(rs.pos_.begin(), rs.pos_.end(), [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return lex_greater(a.c, b.c);
  });
  rs.m_ = static_cast<int>(rs.pos_.size());
  for (int i = 0; i < rs.m_; ++i) rs.pos_index_[rs.pos_[i].c] = i;

  int expect = fam == Family::A   ? rank * (rank + 1) / 2
               : fam == Family::D ? rank * (rank - 1)
               : rank == 6        ? 36
               : rank == 7        ? 63
                                  : 120;
  if (rs.m_ != expect)
    throw StructuralFailure("positive root enumeration produced " + std::to_string(rs.m_) +
                            " roots, expected " + std::to_string(expect));
  return rs;
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > l_) throw NotARoot("simple root index " + std::to_string(i));
  std::vector<int> c(l_, 0);
  c[i - 1] = 1;
  return Root{fam_, l_, c};
}

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> r = pos_;
  for (const Root& p : pos_) r.push_back(p.negated());
  return r;
}

void RootSystem::check_system(const Root& r, const char* who) const {
  if (r.fam != fam_ || r.rank != l_ || static_cast<int>(r.c.size()) != l_)
    throw MixedSystems(std::string(who) + ": root " + to_string(r) + " does not belong to " +
                       std::string(1, static_cast<char>(fam_)) + "_" + std::to_string(l_));
}

void RootSystem::check_member(const Root& r, const char* who) const {
  check_system(r, who);
  if (!is_root(r)) throw NotARoot(std::string(who) + ": " + to_string(r));
}

bool RootSystem::is_root(const Root& r) const {
  check_system(r, "is_root");
  if (pos_index_.count(r.c)) return true;
  return pos_index_.count(r.negated().c) > 0;
}

int RootSystem::positive_index(const Root& r) const {
  check_system(r, "positive_index");
  auto it = pos_index_.find(r.c);
  if (it == pos_index_.end()) throw NotARoot("positive_index: " + to_string(r));
  return it->second;
}

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
  check_system(beta, "pairing");
  check_system(alpha, "pairing");
  // All roots have squared length 2, so <beta,alpha> is the Cartan bilinear form.
  int s = 0;
  for (int i = 0; i < l_; ++i) {
    if (!beta.c[i]) continue;
    for (int j = 0; j < l_; ++j) s += beta.c[i] * cartan_[i][j] * alpha.c[j];
  }
  return s;
}

Root RootSystem::reflect(const Root& alpha, const Root& beta) const {
  check_member(alpha, "reflect");
  check_member(beta, "reflect");
  int k = pairing(beta, alpha);
  Root r = beta;
  for (int i = 0; i < l_; ++i) r.c[i] -= k * alpha.c[i];
  return r;
}

std::vector<int> RootSystem::find_weyl_word(const Root& source, const Root& target) const {
  check_member(source, "find_weyl_word");
  check_system(target, "find_weyl_word");
  if (!is_root(target)) throw NotARoot("find_weyl_word: " + to_string(target));
  if (source == target) return {};
  std::map<std::vector<int>, std::pair<std::vector<int>, int>> parent;  // coords -> (prev, simple idx)
  std::deque<Root> queue{source};
  parent[source.c] = {source.c, 0};
  while (!queue.empty()) {
    Root cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= l_; ++i) {
      Root nxt = reflect(simple_root(i), cur);
      if (parent.count(nxt.c)) continue;
      parent[nxt.c] = {cur.c, i};
      if (nxt == target) {
        std::vector<int> word;
        std::vector<int> at = nxt.c;
        while (at != source.c) {
          auto& [prev, idx] = parent[at];
          word.push_back(idx);
          at = prev;
        }
        std::reverse(word.begin(), word.end());
        return word;
      }
      queue.push_back(nxt);
    }
  }
  throw StructuralFailure("Weyl search exhausted the orbit without reaching the target");
}

}  // namespace chev
