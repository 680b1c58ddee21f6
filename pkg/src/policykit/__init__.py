"""Policy toolkit: output and unemployment gaps, targeted stimulus sizing,
student-loan cost-benefit NPV, minimum-wage retiming, commons games and
charitable-giving responses."""

__version__ = "0.1.0"
