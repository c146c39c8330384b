"""Exit criteria for the package, one test per criterion, all at exact tolerance."""

import io
import time
from decimal import Decimal
from fractions import Fraction

from symham import verify
from symham.cli import main, table_rows
from symham.l2 import kp_value, l2sq_exact, leading_constant, mixed_sum_value, theorem1_value
from symham.oracles import mixed_grid_sum
from symham.pointset import all_shifts, hammersley, sample_shifts, symmetrized

F = Fraction
SEED = 20240101


def shifts(m, exhaustive_up_to, samples):
    return all_shifts(m) if m <= exhaustive_up_to else sample_shifts(m, samples, SEED)


def tasks(check, levels, exhaustive_up_to, samples):
    return [verify.Task(check, m, str(s)) for m in levels for s in shifts(m, exhaustive_up_to, samples)]


def summarize(summaries):
    return all(s.ok for s in summaries), "; ".join(
        f"{s.check} {s.passed}/{s.total}" + (f" first failure: {s.first_failure}" if s.first_failure else "")
        for s in summaries
    )


def test_c01_symmetrized_closed_form_exact(acceptance):
    start = time.perf_counter()
    values = {}
    ok = True
    for m in range(1, 11):
        want = theorem1_value(m)
        got = {l2sq_exact(symmetrized(m, s)) for s in shifts(m, 6, 32)}
        values[m] = got
        ok &= got == {want}
    # independence of the shift, asserted on its own
    independent = all(len(v) == 1 for v in values.values())
    elapsed = time.perf_counter() - start
    assert acceptance("C1 symmetrized closed form exact, m=1..10", ok and independent and elapsed < 120,
                      f"shift-independent={independent}, {elapsed:.1f}s")


def test_c02_reference_l2_value(acceptance):
    zeros = l2sq_exact(symmetrized(8, "00000000"))
    alt = l2sq_exact(symmetrized(8, "01010101"))
    outs = []
    for shift in ("00000000", "01010101"):
        buf = io.StringIO()
        code = main(["l2", "--set", "symmetrized", "--m", "8", "--shift", shift], stdout=buf)
        line = next(l for l in buf.getvalue().splitlines() if l.startswith("L2:"))
        outs.append((code, line.split()[1]))
    printed = [o[1][: len("0.00255571")] for o in outs]
    ok = zeros == alt and all(c == 0 for c, _ in outs) and printed == ["0.00255571"] * 2
    assert acceptance("C2 reference L2 = 0.00255571 for both shifts", ok, f"{printed}, {zeros}")


def test_c03_shifted_closed_form(acceptance):
    anchors = kp_value(1, 1) == F(91, 144) == l2sq_exact(hammersley(1, "0")) and kp_value(
        1, 0
    ) == F(4, 9) == l2sq_exact(hammersley(1, "1"))
    ok, detail = summarize(verify.run(tasks("lemma5", range(1, 13), 6, 32)))
    assert acceptance("C3 shifted Hammersley closed form exact, m<=12", ok and anchors, detail)


def test_c04_mixed_grid_sum(acceptance):
    anchor = mixed_grid_sum(1, "0") == F(-1, 16) == mixed_sum_value(1, 1)
    ok, detail = summarize(verify.run(tasks("lemma6", range(1, 9), 5, 4)))
    assert acceptance("C4 mixed grid sum exact, m<=8", ok and anchor, detail)


def test_c05_digit_and_norm_sums(acceptance):
    runs = verify.run(
        tasks("lemma3", range(1, 7), 6, 0)
        + [verify.Task("lemma4", m) for m in range(1, 11)]
        + tasks("pill", range(2, 7), 6, 0)
    )
    ok, detail = summarize(runs)
    assert acceptance("C5 digit factor sums, norm sums and k-fold products", ok, detail)


def test_c06_local_discrepancy_formula(acceptance):
    ext = [verify.run_task(t) for t in tasks("lemma1_ext", range(1, 7), 3, 4)]
    per_shift = all(r.ok and r.total >= 1000 for r in ext)
    ok, detail = summarize(verify.run(tasks("lemma1", range(1, 7), 4, 4)))
    detail += f"; extension {sum(r.passed for r in ext)}/{sum(r.total for r in ext)} over {len(ext)} shifts"
    assert acceptance("C6 local discrepancy formula and extension = counting", ok and per_shift, detail)


def test_c07_decomposition(acceptance):
    ok, detail = summarize(verify.run(tasks("decomposition", range(1, 9), 4, 4)))
    assert acceptance("C7 decomposition I1..I4, S1..S4 exact, m<=8", ok, detail)


def test_c08_reflection_gap(acceptance):
    ok, detail = summarize(verify.run(tasks("corollary", range(1, 11), 6, 8)))
    assert acceptance("C8 reflection gap <= 1/N, m<=10", ok, detail)


def test_c09a_leading_constants(acceptance):
    got = [leading_constant(k).value.quantize(Decimal("0.0001"), rounding="ROUND_DOWN")
           for k in ("symmetrized", "balanced-shift", "base22")]
    ok = got == [Decimal("0.2451"), Decimal("0.1938"), Decimal("0.1790")]
    assert acceptance("C9a leading constants to 4 places", ok, str(got))


def test_c09b_ratio_monotone(acceptance):
    ratios = [r[4] for r in table_rows(range(1, 15))]
    target = leading_constant("symmetrized").value
    ok = all(abs(b - target) < abs(a - target) for a, b in zip(ratios, ratios[1:]))
    assert acceptance("C9b table ratio approaches 0.2451 monotonically", ok,
                      f"m=1: {ratios[0]:.4f}, m=14: {ratios[-1]:.4f}")


def test_c09c_ratio_from_below_within_3pct(acceptance):
    ratios = [r[4] for r in table_rows(range(1, 15))]
    target = leading_constant("symmetrized").value
    below = all(r < target for r in ratios)
    close = abs(ratios[-1] - target) / target <= Decimal("0.03")
    assert acceptance("C9c table ratio from below, within 3% at m=14", below and close,
                      f"from below={below}, rel. error at m=14={abs(ratios[-1] - target) / target:.3f}")


def test_c10_determinism(acceptance):
    def run(*argv):
        buf = io.StringIO()
        code = main(list(argv), stdout=buf)
        return code, buf.getvalue()

    v = ("verify", "--max-m", "5", "--exhaustive")
    outs = [run(*v, "--workers", "1"), run(*v, "--workers", "1"), run(*v, "--workers", "4")]
    l2s = [run("l2", "--m", "8", "--shift", "alternating", "--format", "json") for _ in range(3)]
    ok = len(set(outs)) == 1 and len(set(l2s)) == 1 and outs[0][0] == 0
    assert acceptance("C10 byte-identical verify/l2 output across runs and workers", ok)
