#!/usr/bin/env python3
"""Walkthrough: the quadratic form h_i^2 - h_{i-1}h_{i+1} over the gammas.

The form can have negative coefficients, so nonnegativity is not termwise.
The structure that saves the day: along each diagonal (fixed index sum j+k)
negatives only appear at the tail, so the prefix-sum regrouping turns the
form into visibly nonnegative brackets whenever gamma is log-concave.
"""

from gammacert import (
    abel_check,
    coeff_table,
    diagonal,
    diagonal_sum,
    quad_coeff,
    sign_quadratic,
    check_diagonal_factorization,
)
from gammacert.render import format_quadratic_form, format_regrouped

print("=== small tables (n = 6) ===")
for i in (1, 2, 3):
    print(format_quadratic_form(coeff_table(6, i)))

print()
print("=== the n = 8, i = 3 form, regrouped by diagonals ===")
print(format_quadratic_form(coeff_table(8, 3)))
print(format_regrouped(coeff_table(8, 3)))
print("Each bracket pairs a prefix sum with a difference g_j g_k - g_{j-1} g_{k+1};")
print("for log-concave gamma without internal zeros every factor is nonnegative.")

print()
print("=== tail-sign structure at n = 16, i = 5 ===")
diag = diagonal(16, 5, 3, "even")
print(f"index-sum-6 diagonal: {diag.values}  tail-sign ok: {diag.tail_sign_ok}  total: {diag.total}")
quad = sign_quadratic(16, 5, 3)
print(f"sign quadratic: A={quad.a} (<0), B={quad.b} (>0); values A*j^2+B:",
      [quad.at(j) for j in range(4)])
print("factorization identity at j=1,2:",
      check_diagonal_factorization(16, 5, 3, 1), check_diagonal_factorization(16, 5, 3, 2))
print(f"(the j=2 instance recovers c[1,5] = {quad_coeff(16, 5, 1, 5)} exactly)")

print()
print("=== why a one-sign-change diagonal with nonnegative total is enough ===")
weights = (16, 9, 4, 1)  # any weakly decreasing nonnegative weights
rep = abel_check(diag.values, weights)
print(f"sum({diag.values} * {weights}) = {rep.total} >= 0")
print(f"prefix sums {rep.prefix_sums} are unimodal and nonnegative;")
print(f"summation-by-parts terms {rep.terms} are each nonnegative.")

print()
print("=== diagonal totals are always nonnegative ===")
for r in range(0, 11):
    print(f"  index sum {r}: {diagonal_sum(16, 5, r)}")
