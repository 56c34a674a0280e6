"""Jinja2 template for the human-readable check summary written to stderr."""

from __future__ import annotations

from jinja2 import Template

from identities.report import CheckReport

# Stays free of timestamps so stderr is reproducible as well.

SUMMARY_TEMPLATE = Template(
    """\
Identity checks: k={{ k }}, n_max={{ n_max }}, weight={{ weight }}, seed={{ seed }}
{% for suite, reports in results.items() %}
[{{ suite }}]
{% for report in reports %}
  {{ "%-26s"|format(report.identity) }} {{ "%8d"|format(report.cases) }} comparisons  \
{% if report.passed %}ok{% else %}FAILED ({{ report.counterexamples|length }}){% endif %}

{% for c in report.counterexamples[:max_listed] %}
    - {{ c.identity }} {{ c.flavor }} n={{ c.n }} v={{ c.v }}\
{% if c.m is not none %} m={{ c.m }}{% endif %}\
{% if c.j is not none %} j={{ c.j }}{% endif %}\
{% if c.sigma is not none %} sigma={{ c.sigma }}{% endif %}

{% endfor %}
{% if report.counterexamples|length > max_listed %}
    ... {{ report.counterexamples|length - max_listed }} more
{% endif %}
{% endfor %}
{% endfor %}
{{ "PASS" if passed else "FAIL" }}: {{ failures }} counterexamples in {{ total }} comparisons
""",
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def build_summary(
    results: dict[str, list[CheckReport]],
    *,
    k: int,
    n_max: int,
    weight: str,
    seed: int,
    max_listed: int = 3,
) -> str:
    """Render the summary of a ``check`` run."""
    reports = [r for group in results.values() for r in group]
    failures = sum(len(r.counterexamples) for r in reports)
    return SUMMARY_TEMPLATE.render(
        results=results,
        k=k,
        n_max=n_max,
        weight=weight,
        seed=seed,
        max_listed=max_listed,
        failures=failures,
        total=sum(r.cases for r in reports),
        passed=failures == 0,
    )
