#include "coeven/closed_forms.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace coeven {

namespace {

// Ceiling of a/b for b > 0 and any sign of a.
int ceil_div(int a, int b) {
  if (a >= 0) return (a + b - 1) / b;
  return -((-a) / b);
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

int gamma_path(int n) {
  if (n < 1) throw Error(Error::Kind::bad_parameter, "gamma_path needs n >= 1");
  return ceil_div(n, 3);
}

int gamma_coe_path(int n) {
  if (n < 1) throw Error(Error::Kind::bad_parameter, "gamma_coe_path needs n >= 1");
  return 2 + ceil_div(n - 4, 3);
}

BigInt PathCountTable::at(int n, int i) const {
  if (n < 1 || n >= static_cast<int>(rows.size())) return 0;
  if (i < 0 || i > n) return 0;
  return rows[n][i];
}

PathCountTable path_domination_table(int n_max, PathRecurrence mode) {
  if (n_max < 1) throw Error(Error::Kind::bad_parameter, "table needs n_max >= 1");
  PathCountTable t;
  t.mode = mode;
  t.rows.assign(n_max + 1, {});

  // Base rows from the enumeration oracle.
  for (int n = 1; n <= std::min(n_max, 3); ++n) {
    auto counts = count_dominating_sets(path_graph(n));
    t.rows[n] = counts.coeff;
  }

  for (int n = 4; n <= n_max; ++n) {
    t.rows[n].assign(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
      if (mode == PathRecurrence::corrected)
        t.rows[n][i] = t.at(n - 1, i - 1) + t.at(n - 2, i - 1) + t.at(n - 3, i - 1);
      else
        t.rows[n][i] = t.at(n - 1, i - 1) + t.at(n - 1, i - 2) + t.at(n - 1, i - 3);
    }
  }
  return t;
}

BigInt coe_path_count(int n, int i) {
  if (n < 3) throw Error(Error::Kind::bad_parameter, "coe_path_count needs n >= 3");
  if (i < 0 || i > n) return 0;
  if (n <= 4) {
    auto counts = count_coeven_dominating_sets(path_graph(n));
    return counts.coeff[i];
  }
  static thread_local PathCountTable cache;
  if (static_cast<int>(cache.rows.size()) <= n - 2 ||
      cache.mode != PathRecurrence::corrected)
    cache = path_domination_table(std::max(n - 2, 3), PathRecurrence::corrected);
  return cache.at(n - 2, i - 2);
}

std::vector<std::vector<BigInt>> coe_path_table(int n_max) {
  if (n_max < 1) throw Error(Error::Kind::bad_parameter, "table needs n_max >= 1");
  std::vector<std::vector<BigInt>> rows(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    rows[n].assign(n + 1, 0);
    if (n <= 2) {
      auto counts = count_coeven_dominating_sets(path_graph(n));
      rows[n] = counts.coeff;
    } else {
      for (int i = 1; i <= n; ++i) rows[n][i] = coe_path_count(n, i);
    }
  }
  return rows;
}

CountsByCardinality coe_bipartite_counts(int n, int m) {
  if (n < 1 || m < 1)
    throw Error(Error::Kind::bad_parameter, "bipartite counts need n, m >= 1");
  // The published case split assumes the odd side (if only one) is listed
  // first; swap for the symmetric case.
  if (n % 2 == 0 && m % 2 == 1) std::swap(n, m);

  CountsByCardinality counts;
  counts.coeff.assign(n + m + 1, 0);
  if (n % 2 == 1 && m % 2 == 1) {
    counts.coeff[n + m] = 1;
  } else if (n % 2 == 1 && m % 2 == 0) {
    for (int i = m + 1; i <= n + m; ++i) counts.coeff[i] = binomial(n, i - m);
  } else {
    for (int i = 2; i <= n + m; ++i) {
      BigInt total = 0;
      for (int t = 1; t <= n; ++t) {
        int s = i - t;
        if (s < 1 || s > m) continue;
        total += binomial(n, t) * binomial(m, s);
      }
      counts.coeff[i] = total;
    }
  }
  return counts;
}

CountsByCardinality coe_complete_counts(int n) {
  if (n < 1) throw Error(Error::Kind::bad_parameter, "complete counts need n >= 1");
  CountsByCardinality counts;
  counts.coeff.assign(n + 1, 0);
  if (n % 2 == 0) {
    counts.coeff[n] = 1;
  } else {
    for (int i = 1; i <= n; ++i) counts.coeff[i] = binomial(n, i);
  }
  return counts;
}

Family family_from_string(const std::string& s) {
  if (s == "path") return Family::path;
  if (s == "cycle") return Family::cycle;
  if (s == "complete") return Family::complete;
  if (s == "complete_bipartite" || s == "bipartite") return Family::complete_bipartite;
  if (s == "star") return Family::star;
  throw Error(Error::Kind::bad_parameter, "unknown family: " + s);
}

Graph family_graph(Family f, int n, int m) {
  switch (f) {
    case Family::path: return path_graph(n);
    case Family::cycle: return cycle_graph(n);
    case Family::complete: return complete_graph(n);
    case Family::complete_bipartite: return complete_bipartite_graph(n, m);
    case Family::star: return star_graph(n);
  }
  throw Error(Error::Kind::bad_parameter, "unknown family");
}

std::vector<BigInt> family_generating_function(Family f, int n, int m) {
  switch (f) {
    case Family::complete: return coe_complete_counts(n).coeff;
    case Family::complete_bipartite: return coe_bipartite_counts(n, m).coeff;
    case Family::star: return coe_bipartite_counts(1, n - 1).coeff;
    default:
      throw Error(Error::Kind::bad_parameter,
                  "no published generating function for this family");
  }
}

std::string path_table_tsv(int n_max, bool oracle_counts) {
  std::ostringstream out;
  out << "n\\j";
  for (int j = 1; j <= n_max; ++j) out << "\t" << j;
  out << "\n";

  std::vector<std::vector<BigInt>> rows;
  if (oracle_counts) {
    rows.assign(n_max + 1, {});
    for (int n = 1; n <= n_max; ++n)
      rows[n] = count_coeven_dominating_sets(path_graph(n)).coeff;
  } else {
    rows = coe_path_table(n_max);
  }

  for (int n = 1; n <= n_max; ++n) {
    out << n;
    for (int j = 1; j <= n; ++j) out << "\t" << rows[n][j];
    out << "\n";
  }
  return out.str();
}

}  // namespace coeven
