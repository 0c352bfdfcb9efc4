import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def nu_word(min_size=1, max_size=9):
    return st.text(alphabet="NE", min_size=min_size, max_size=max_size)


@st.composite
def nu_and_path(draw, min_size=1, max_size=9):
    """A nu word together with one of its nu-Dyck paths (as a left area vector)."""
    nu = draw(nu_word(min_size, max_size))
    caps = []
    x = 0
    for s in nu:
        if s == "E":
            x += 1
        else:
            caps.append(x)
    la = []
    lo = 0
    for cap in caps:
        v = draw(st.integers(min_value=lo, max_value=cap))
        la.append(v)
        lo = v
    return nu, tuple(la)


@st.composite
def dyck_word(draw, min_height=1, max_height=6):
    h = draw(st.integers(min_value=min_height, max_value=max_height))
    la = []
    lo = 0
    for i in range(h):
        v = draw(st.integers(min_value=lo, max_value=i))
        la.append(v)
        lo = v
    parts, prev = [], 0
    for v in la:
        parts.append("E" * (v - prev) + "N")
        prev = v
    parts.append("E" * (h - prev))
    return "".join(parts)


ACCEPTANCE_LINES = {}


def record_criterion(number, ok, detail=""):
    """Remember one acceptance line; printed at the end of the session."""
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: (int(str(k).rstrip("b")), str(k))):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
