#include "umbral/cli/sweeps.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace umbral::cli {

namespace {

constexpr std::array<std::string_view, 12> kProperties = {
    "reciprocity",   "antidiagonal",     "paths",         "poly-reciprocity",
    "nonvanishing",  "denominators",     "integrality",   "psi-matrix",
    "psi-congruences", "hermite-stern",  "staudt-clausen", "theorem4",
};

std::string key(unsigned r, unsigned s) {
  return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

std::string rect(const SweepOptions& o) {
  return "0<=r<=" + std::to_string(o.max_r) + ", 0<=s<=" + std::to_string(o.max_s);
}

struct RowResult {
  std::size_t instances = 0;
  std::vector<std::string> failures;

  void check(bool ok, std::string witness) {
    ++instances;
    if (!ok) failures.push_back(std::move(witness));
  }
};

// Runs fn(row, result) for every row, spreading rows over `jobs` threads.
// Results are merged in row order so the report is independent of `jobs`.
template <class Fn>
void for_each_row(unsigned rows, unsigned jobs, VerifyReport& report, Fn fn) {
  std::vector<RowResult> results(rows);
  std::atomic<unsigned> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (unsigned row; (row = next++) < rows;) {
      try {
        fn(row, results[row]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned threads = std::clamp(jobs, 1U, std::max(rows, 1U));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  for (auto& r : results) {
    report.instances += r.instances;
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
}

BernoulliCache make_cache(const SweepOptions& o) { return BernoulliCache(o.max_r + o.max_s + 2); }

void sweep_reciprocity(const SweepOptions& o, VerifyReport& report) {
  report.range = rect(o);
  const auto cache = make_cache(o);
  for_each_row(o.max_r + 1, o.jobs, report, [&](unsigned r, RowResult& out) {
    for (unsigned s = 0; s <= o.max_s; ++s) {
      Rational lhs = bs_direct(cache, r, s) * Rational(parity_sign(r));
      Rational rhs = bs_direct(cache, s, r) * Rational(parity_sign(s));
      out.check(lhs == rhs, key(r, s));
    }
  });
}

void sweep_antidiagonal(const SweepOptions& o, VerifyReport& report) {
  const unsigned max_n = o.max_r + o.max_s;
  report.range = "0<=n<=" + std::to_string(max_n);
  const auto cache = make_cache(o);
  for_each_row(max_n + 1, o.jobs, report, [&](unsigned n, RowResult& out) {
    out.check(antidiagonal_sum(cache, n) == Rational(n == 0 ? 1 : 0), "n=" + std::to_string(n));
  });
}

void sweep_paths(const SweepOptions& o, VerifyReport& report) {
  report.range = rect(o);
  const auto cache = make_cache(o);
  const BsTable table = bs_table_recursive(cache, o.max_r, o.max_s);
  for_each_row(o.max_r + 1, o.jobs, report, [&](unsigned r, RowResult& out) {
    for (unsigned s = 0; s <= o.max_s; ++s) {
      const Rational direct = bs_direct(cache, r, s);
      bool ok = direct == table.at(r, s);
      try {
        ok = ok && direct == bs_via_difference(cache, r, s);
      } catch (const InvariantViolation&) {
        ok = false;
      }
      out.check(ok, key(r, s));
    }
  });
}

void sweep_poly_reciprocity(const SweepOptions& o, VerifyReport& report) {
  report.range = rect(o);
  const auto cache = make_cache(o);
  for_each_row(o.max_r + 1, o.jobs, report, [&](unsigned r, RowResult& out) {
    for (unsigned s = 0; s <= o.max_s; ++s) {
      Poly lhs = poly_scale(bs_polynomial(cache, r, s), Rational(parity_sign(r)));
      Poly rhs = poly_scale(poly_compose_neg(bs_polynomial(cache, s, r)), Rational(parity_sign(s)));
      out.check(lhs == rhs, key(r, s));
    }
  });
}

void sweep_nonvanishing(const SweepOptions& o, VerifyReport& report) {
  report.range = rect(o);
  const auto cache = make_cache(o);
  for_each_row(o.max_r + 1, o.jobs, report, [&](unsigned r, RowResult& out) {
    for (unsigned s = 0; s <= o.max_s; ++s) {
      out.check(bs_direct(cache, r, s).is_zero() == is_vanishing_key(r, s), key(r, s));
    }
  });
  std::string zeros;
  std::size_t count = 0;
  for (unsigned r = 0; r <= o.max_r; ++r) {
    for (unsigned s = 0; s <= o.max_s; ++s) {
      if (!is_vanishing_key(r, s)) continue;
      ++count;
      if (count <= 8) zeros += " " + key(r, s);
    }
  }
  if (count > 8) zeros += " ...";
  report.notes.push_back("exceptions (B = 0): " + std::to_string(count) + zeros);
}

void sweep_denominators(const SweepOptions& o, VerifyReport& report) {
  report.range = rect(o);
  const auto cache = make_cache(o);
  for_each_row(o.max_r + 1, o.jobs, report, [&](unsigned r, RowResult& out) {
    for (unsigned s = 0; s <= o.max_s; ++s) {
      const Int exact = denom_exact(cache, r, s);
      const Int formula = denom_formula(r, s).value;
      bool ok = exact == formula && formula == denom_formula(s, r).value;
      if (r >= 2 && s >= 2) ok = ok && denom_via_psi(r, s) == exact;
      out.check(ok, key(r, s));
    }
  });
}

void sweep_integrality(const SweepOptions& o, VerifyReport& report) {
  report.range = "2<=r<=" + std::to_string(o.max_r) + ", 2<=s<=" + std::to_string(o.max_s);
  const auto cache = make_cache(o);
  for_each_row(o.max_r + 1, o.jobs, report, [&](unsigned r, RowResult& out) {
    if (r < 2) return;
    for (unsigned s = 2; s <= o.max_s; ++s) {
      bool ok = true;
      try {
        (void)integrality_witness(cache, r, s);
      } catch (const InvariantViolation&) {
        ok = false;
      }
      const Int psi2 = psi(r, s, 2).value;
      const Int psi3 = psi(r, s, 3).value;
      ok = ok && psi2 == Int::pow2(r - 1) && psi3 == psi2;
      ok = ok && psi2.divisible_by(2UL) && !psi3.divisible_by(3UL);
      for (unsigned p : primes_up_to(r + s + 1)) {
        if (p < 5) continue;
        if (r % (p - 1) == 0 || s % (p - 1) == 0) ok = ok && !psi(r, s, p).value.divisible_by(p);
      }
      out.check(ok, key(r, s));
    }
  });
}

void sweep_psi_matrix(const SweepOptions& o, VerifyReport& report) {
  const unsigned max_p = o.max_p.value_or(19);
  report.range = "5<=p<=" + std::to_string(max_p);
  std::vector<unsigned> primes;
  for (unsigned p : primes_up_to(max_p)) {
    if (p >= 5) primes.push_back(p);
  }
  for_each_row(static_cast<unsigned>(primes.size()), o.jobs, report,
               [&](unsigned i, RowResult& out) {
                 bool ok = true;
                 try {
                   (void)psi_matrix(primes[i]);
                 } catch (const InvariantViolation&) {
                   ok = false;
                 }
                 out.check(ok, "p=" + std::to_string(primes[i]));
               });
}

// Psi_{r,s}(p) for 0 <= r, s <= bound, row-major.
std::vector<Int> psi_grid(unsigned bound, unsigned p) {
  std::vector<Int> grid;
  grid.reserve(static_cast<std::size_t>(bound + 1) * (bound + 1));
  for (unsigned r = 0; r <= bound; ++r) {
    for (unsigned s = 0; s <= bound; ++s) grid.push_back(psi(r, s, p).value);
  }
  return grid;
}

void sweep_psi_congruences(const SweepOptions& o, VerifyReport& report) {
  const unsigned max_p = o.max_p.value_or(37);
  report.range = "1<=r,r'<=" + std::to_string(o.max_r) + ", 0<=s,s'<=" + std::to_string(o.max_s) +
                 ", 3<=p<=" + std::to_string(max_p);
  std::vector<unsigned> primes;
  for (unsigned p : primes_up_to(max_p)) {
    if (p >= 3) primes.push_back(p);
  }
  const unsigned bound = std::max(o.max_r, o.max_s);
  for_each_row(static_cast<unsigned>(primes.size()), o.jobs, report,
               [&](unsigned i, RowResult& out) {
                 const unsigned p = primes[i];
                 const unsigned period = p - 1;
                 const auto grid = psi_grid(bound, p);
                 auto at = [&](unsigned r, unsigned s) -> const Int& {
                   return grid[static_cast<std::size_t>(r) * (bound + 1) + s];
                 };
                 const std::string tag = " p=" + std::to_string(p);
                 std::size_t ok_count = 0;
                 auto check = [&](bool ok, const std::string& what) {
                   if (ok) {
                     ++ok_count;
                   } else {
                     out.failures.push_back(what + tag);
                   }
                 };
                 for (unsigned r = 1; r <= o.max_r; ++r) {
                   for (unsigned s = 0; s <= o.max_s; ++s) {
                     for (unsigned s2 = s % period; s2 <= o.max_s; s2 += period) {
                       if (s2 == s) continue;
                       check(at(r, s) == at(r, s2), "shift " + key(r, s) + "~" + key(r, s2));
                     }
                     for (unsigned r2 = (r - 1) % period + 1; r2 <= o.max_r; r2 += period) {
                       if (r2 == r) continue;
                       check((at(r, s) - at(r2, s)).divisible_by(p),
                             "rank " + key(r, s) + "~" + key(r2, s));
                     }
                     if (s >= 1 && s <= o.max_r && r <= o.max_s) {
                       Int lhs = at(r, s) * Int(parity_sign(r));
                       Int rhs = at(s, r) * Int(parity_sign(s));
                       check((lhs - rhs).divisible_by(p), "reciprocity " + key(r, s));
                     }
                     if (s >= 1 && p >= 5) {
                       const bool unit = !at(r, s).divisible_by(p);
                       const bool residues = least_positive_residue(r, period) +
                                                 least_positive_residue(s, period) >=
                                             period;
                       check(unit == residues, "residue criterion " + key(r, s));
                     }
                   }
                 }
                 out.instances += ok_count + out.failures.size();
               });
}

void sweep_hermite_stern(const SweepOptions& o, VerifyReport& report) {
  const unsigned max_p = o.max_p.value_or(31);
  report.range = "1<=m<=" + std::to_string(o.max_r) + ", p<=" + std::to_string(max_p);
  const auto primes = primes_up_to(max_p);
  for_each_row(o.max_r, o.jobs, report, [&](unsigned row, RowResult& out) {
    const unsigned m = row + 1;
    for (unsigned p : primes) {
      out.check(hermite_stern_check(m, p) == 0, "m=" + std::to_string(m) + " p=" + std::to_string(p));
    }
  });
}

void sweep_staudt_clausen(const SweepOptions& o, VerifyReport& report) {
  const unsigned max_n = o.max_r + o.max_s;
  report.range = "0<=n<=" + std::to_string(max_n);
  const auto cache = make_cache(o);
  for_each_row(max_n + 1, o.jobs, report, [&](unsigned n, RowResult& out) {
    bool ok = bernoulli_denominator(n) == cache.at(n).den();
    if (n >= 2 && n % 2 == 0) {
      try {
        (void)von_staudt_clausen_witness(cache, n);
      } catch (const InvariantViolation&) {
        ok = false;
      }
    }
    out.check(ok, "n=" + std::to_string(n));
  });
}

void sweep_theorem4(const SweepOptions& o, VerifyReport& report) {
  report.range = rect(o);
  const auto cache = make_cache(o);
  const Theorem4Report t4 = theorem4_divisibility_sweep(cache, o.max_r, o.max_s);
  for (const auto& part : t4.parts) {
    report.instances += part.checked;
    report.notes.push_back(part.name + ": " + std::to_string(part.passed) + "/" +
                           std::to_string(part.checked));
  }
  for (const auto& f : t4.failures) {
    std::string w = f.part + " " + key(f.r, f.s);
    if (f.p != 0) w += " p=" + std::to_string(f.p);
    report.failures.push_back(std::move(w));
  }
}

}  // namespace

std::span<const std::string_view> property_names() { return kProperties; }

VerifyReport run_sweep(std::string_view property, const SweepOptions& options) {
  using Sweep = void (*)(const SweepOptions&, VerifyReport&);
  constexpr std::array<Sweep, kProperties.size()> sweeps = {
      sweep_reciprocity,  sweep_antidiagonal,    sweep_paths,          sweep_poly_reciprocity,
      sweep_nonvanishing, sweep_denominators,    sweep_integrality,    sweep_psi_matrix,
      sweep_psi_congruences, sweep_hermite_stern, sweep_staudt_clausen, sweep_theorem4,
  };
  const auto it = std::find(kProperties.begin(), kProperties.end(), property);
  if (it == kProperties.end()) {
    throw DomainError("unknown property '" + std::string(property) + "'");
  }
  VerifyReport report;
  report.property = std::string(property);
  const auto start = std::chrono::steady_clock::now();
  sweeps[static_cast<std::size_t>(it - kProperties.begin())](options, report);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string render_report(const VerifyReport& report, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::json) {
    Json doc;
    doc["property"] = report.property;
    doc["range"] = report.range;
    doc["instances"] = report.instances;
    doc["failures"] = report.failures;
    doc["notes"] = report.notes;
    // Wall time in integer microseconds keeps the document free of floats.
    doc["micros"] = static_cast<std::int64_t>(report.seconds * 1e6);
    doc["ok"] = report.ok();
    out << doc.dump() << '\n';
    return out.str();
  }
  if (format == OutputFormat::csv) {
    out << "property,range,instances,failures,micros\n";
    out << report.property << ",\"" << report.range << "\"," << report.instances << ','
        << report.failures.size() << ',' << static_cast<std::int64_t>(report.seconds * 1e6)
        << '\n';
    return out.str();
  }
  out << "property:  " << report.property << '\n';
  out << "range:     " << report.range << '\n';
  out << "instances: " << report.instances << '\n';
  out << "failures:  " << report.failures.size() << '\n';
  for (std::size_t i = 0; i < report.failures.size() && i < 20; ++i) {
    out << "  witness " << report.failures[i] << '\n';
  }
  if (report.failures.size() > 20) out << "  ...\n";
  for (const auto& note : report.notes) out << "note:      " << note << '\n';
  out.setf(std::ios::fixed);
  out.precision(3);
  out << "time:      " << report.seconds << " s\n";
  out << (report.ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace umbral::cli
