import jinja2

TRACE_TEMPLATE_STR = """\
{% for step in trace.steps %}
step {{ loop.index }}: {{ step }}
{% endfor %}
iterations={{ trace.iterations }} divisions={{ trace.steps | length }}
gcd={{ gcd }}
cost mul={{ counters.mul_cost }} add={{ counters.add_cost }} \
model={{ counters.model_cost }} ramified={{ counters.ramified_removals }} \
volume={{ counters.remainder_volume }}
"""

TABLE_TEMPLATE_STR = """\
{% if header %}
{{ columns | join(' ') }}
{% endif %}
{% for row in rows %}
{{ row | join(' ') }}
{% endfor %}
"""

VERIFY_TEMPLATE_STR = """\
suite {{ report.suite }}: {{ report.cases }} cases, max norm \
{{ report.max_norm }}, seed {{ report.seed }}
{% if report.passed %}
passed
{% else %}
FAILED
counterexample: {{ report.counterexample }}
{% endif %}
"""

_environment = jinja2.Environment(trim_blocks=True, lstrip_blocks=True,
                                  keep_trailing_newline=True)

TRACE_TEMPLATE = _environment.from_string(TRACE_TEMPLATE_STR)
TABLE_TEMPLATE = _environment.from_string(TABLE_TEMPLATE_STR)
VERIFY_TEMPLATE = _environment.from_string(VERIFY_TEMPLATE_STR)
