#include "rosenets/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rosenets {

namespace {

double first_term(const BoundConstants& c) {
  return -std::expm1(-(1.0 - 1.0 / c.k)) / (c.alpha * c.beta);
}

void append_float(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  out += buf;
}

}  // namespace

BoundConstants make_bound_constants(int k, int tau, int d_in, int d_out) {
  if (k < 3) throw std::domain_error("bound constants require k >= 3");
  if (tau < 0 || tau > k) throw std::domain_error("tau outside [0, k]");
  if (d_in < 1) throw std::domain_error("bound constants require d_in >= 1");
  if (d_out < 0) throw std::domain_error("negative d_out");
  BoundConstants c;
  c.k = k;
  c.tau = tau;
  c.d_in = d_in;
  c.d_out = d_out;
  c.alpha = 2.0 * d_in + 1.0;
  c.beta = 1.0 + d_in + d_out;
  c.gamma = std::exp(static_cast<double>(k - 3) / (k - 2));
  if (tau <= k - 2)
    c.eta = std::exp(static_cast<double>(k - 2 * tau - 1) / (k - tau - 1));
  return c;
}

RatioTerms single_removal_terms(const BoundConstants& c) {
  if (c.tau != 1) throw std::domain_error("single-removal ratio requires tau == 1");
  RatioTerms t;
  t.term1 = first_term(c);
  double gd = std::pow(c.gamma, 1.0 / c.d_in);
  t.term2 = (gd - 1.0) / (c.beta * gd - 1.0);
  t.ratio = std::max(t.term1, *t.term2);
  return t;
}

double single_removal_ratio(const BoundConstants& c) {
  return single_removal_terms(c).ratio;
}

RatioTerms general_removal_terms(const BoundConstants& c) {
  if (c.tau < 1) throw std::domain_error("removal ratio requires tau >= 1");
  RatioTerms t;
  t.term1 = first_term(c);
  t.ratio = t.term1;
  if (!c.eta.has_value()) return t;  // tau in {k-1, k}: first term only
  double ed = std::pow(*c.eta, 1.0 / c.d_in);
  double denom = c.tau * c.alpha * c.beta * ed + std::expm1(-(1.0 - 1.0 / c.k));
  if (denom <= 0.0) return t;  // outside the second form's domain
  t.term2 = c.tau * c.alpha * (ed - 1.0) / denom;
  t.ratio = std::max(t.term1, *t.term2);
  return t;
}

double general_removal_ratio(const BoundConstants& c) {
  return general_removal_terms(c).ratio;
}

double approximation_ratio(const BoundConstants& c) {
  return c.tau == 1 ? single_removal_ratio(c) : general_removal_ratio(c);
}

std::string bounds_table_csv(const std::vector<int>& k_values,
                             const std::vector<int>& tau_values, int d_in, int d_out) {
  std::string out = "k,tau,d_in,d_out,alpha,beta,gamma,eta,term1,term2,ratio\n";
  for (int k : k_values) {
    for (int tau : tau_values) {
      out += std::to_string(k) + "," + std::to_string(tau) + "," +
             std::to_string(d_in) + "," + std::to_string(d_out) + ",";
      BoundConstants c;
      try {
        c = make_bound_constants(k, tau, d_in, d_out);
        if (tau < 1) throw std::domain_error("no removal");
      } catch (const std::domain_error&) {
        out += "error,error,error,error,error,error,error\n";
        continue;
      }
      append_float(out, c.alpha);
      out += ",";
      append_float(out, c.beta);
      out += ",";
      append_float(out, c.gamma);
      out += ",";
      if (c.eta.has_value()) {
        append_float(out, *c.eta);
      } else {
        out += "na";
      }
      out += ",";
      RatioTerms t = tau == 1 ? single_removal_terms(c) : general_removal_terms(c);
      append_float(out, t.term1);
      out += ",";
      if (t.term2.has_value()) {
        append_float(out, *t.term2);
      } else {
        out += "na";
      }
      out += ",";
      append_float(out, t.ratio);
      out += "\n";
    }
  }
  return out;
}

}  // namespace rosenets
