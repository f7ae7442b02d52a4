"""
Human-readable law report
"""

import click


class ReportGenerator:
    def __init__(self):
        self.RED = "red"
        self.YELLOW = "yellow"
        self.GREEN = "green"
        self.BLUE = "blue"

    def _echo(self, text="", color=None, bold=False):
        click.echo(click.style(text, fg=color, bold=bold) if color else text, err=True)

    def print_law_summary(self, report, q):
        """Print a colour summary of a LawReport on stderr"""
        self._echo("=" * 70)
        self._echo(f"Law report for {report.carrier}", self.BLUE, bold=True)
        self._echo("=" * 70)

        if report.mode == "sampled":
            self._echo(f"  Mode: sampled ({report.samples} cases per law, seed {report.seed})")
        else:
            self._echo("  Mode: exhaustive")

        for result in report.results:
            mark = click.style("pass", fg=self.GREEN) if result.passed else click.style("FAIL", fg=self.RED, bold=True)
            self._echo(f"  [{mark}] {result.name:<26} {result.cases:>7} cases")
            if result.counterexample is not None:
                shown = ", ".join(str(q.format_element(x)) for x in result.counterexample)
                self._echo(f"         counterexample: ({shown})", self.YELLOW)
            if result.witness is not None:
                shown = ", ".join(str(q.format_element(x)) for x in result.witness)
                self._echo(f"         mix violated at: ({shown})", self.YELLOW)
            if result.error:
                self._echo(f"         {result.error}", self.YELLOW)

        failures = report.failures
        if failures:
            self._echo(f"\n{len(failures)} law(s) failed", self.RED, bold=True)
        else:
            self._echo("\nAll laws hold", self.GREEN, bold=True)
        self._echo("=" * 70)

    def print_error(self, message):
        self._echo(f"error: {message}", self.RED)

