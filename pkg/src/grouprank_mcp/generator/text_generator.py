#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Text report generator module.
This module renders report dictionaries as human-readable Markdown for --pretty.
"""

from typing import Any, Dict

from jinja2 import DictLoader
from jinja2 import Environment
from jinja2 import StrictUndefined

TEMPLATES = {
    "betti": """\
# Presentation

`{{ input }}`

- generators: {{ generators }}, relators: {{ relators }}
- abelianization: {{ abelianization }}
- Betti number: **{{ betti }}**
- torsion: {{ torsion | chain }}
- rank bounds: {{ rank_bounds[0] }} ≤ rank ≤ {{ rank_bounds[1] }}
""",
    "check": """\
# Check ({{ kind }})

`{{ input }}` is valid.

- normalized: `{{ normalized }}`
{% if kind == "presentation" %}- generators: {{ generators }}, relators: {{ relators }}
{% endif %}""",
    "expr": """\
# Expression

`{{ expression }}`

| co-rank | Betti | rank |
|--------:|------:|-----:|
| {{ corank }} | {{ betti }} | {{ rank }} |

- torsion of the abelianization: {{ torsion | chain }}
- isotropy index between {{ isotropy[0] }} and {{ isotropy[1] }}
- torsion-free: {{ "yes" if torsion_free else "no" }}
""",
    "realize": """\
# Realize (c, b, r) = ({{ request.c }}, {{ request.b }}, {{ request.r }})

{% if not admissible %}Inadmissible:
{% for violation in violations %}- {{ violation }}
{% endfor %}{% else %}- parts: {{ parts | join(", ") if parts else "none" }}
{% if expression is defined %}- expression: `{{ expression }}`
{% endif %}{% if presentation is defined %}- presentation: `{{ presentation }}`
{% endif %}- torsion-free: {{ "yes" if torsion_free else "no" }}
{% if verification is defined %}
## Verification

| path | co-rank | Betti | rank / generators | torsion |
|------|--------:|------:|------------------:|---------|
| calculus | {{ verification.calculus.corank }} | {{ verification.calculus.betti }} | {{ verification.calculus.rank }} | |
| SNF | | {{ verification.snf.betti }} | {{ verification.snf.generators }} | {{ verification.snf.torsion | chain }} |

verified: {{ "yes" if verification.verified else "no" }}
{% endif %}{% endif %}""",
    "oracle": """\
# Oracle

`{{ input }}`

| prime | homomorphisms | log_dim |
|------:|--------------:|--------:|
{% for row in counts %}| {{ row.prime }} | {{ row.count }} | {{ row.log_dim }} |
{% endfor %}
- oracle Betti number: {{ oracle_betti }} ({{ oracle_kind | replace("_", " ") }})
- SNF Betti number: {{ snf_betti }}
- agrees: {{ "yes" if agrees else "no" }}
{% for warning in warnings %}- warning: {{ warning }}
{% endfor %}""",
    "error": """\
# Error

{{ error.code }}: {{ error.message }}
{% if error.violations is defined %}{% for violation in error.violations %}- {{ violation }}
{% endfor %}{% endif %}""",
}


def _chain(values) -> str:
    return " | ".join(str(v) for v in values) if values else "none"


class TextGenerator:
    """
    Renders report dictionaries as Markdown text.
    """

    def __init__(self):
        """
        Initialize the generator with the built-in templates.
        """
        self.environment = Environment(
            loader=DictLoader(TEMPLATES),
            undefined=StrictUndefined,
            keep_trailing_newline=True,
            autoescape=False,
        )
        self.environment.filters["chain"] = _chain

    def generate(self, report: Dict[str, Any]) -> str:
        """
        Render a report.

        Args:
            report: A report from grouprank_mcp.report, or a document with an "error" key.

        Returns:
            str: Markdown content for the report.
        """
        if "error" in report:
            name = "error"
        else:
            name = report.get("command", "error")
        template = self.environment.get_template(name)
        return template.render(**report)
