"""Command groups of the command line, one per noun."""
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, List, Tuple

from utils.errors import UsageError
from utils.helpers import load_algebra, load_module

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERIFICATION_FAILED = 2


@dataclass
class Command:
    name: str
    handler: Callable
    help: str = ''
    arguments: Tuple[Tuple[tuple, dict], ...] = ()


@dataclass
class CommandGroup:
    """Registers ``<group> <action>`` subcommands, the way a blueprint registers routes.

    Handlers take the parsed arguments and return ``(payload, status)``.
    """

    name: str
    help: str = ''
    commands: Dict[str, Command] = dc_field(default_factory=dict)

    def command(self, name: str, help: str = '', arguments: List[Tuple[tuple, dict]] = ()):
        def decorator(func):
            self.commands[name] = Command(name, func, help, tuple(arguments))
            return func
        return decorator

    def register(self, subparsers, parents):
        group_parser = subparsers.add_parser(self.name, help=self.help)
        actions = group_parser.add_subparsers(dest='action', metavar='ACTION')
        actions.required = True
        for cmd in self.commands.values():
            parser = actions.add_parser(cmd.name, help=cmd.help, parents=parents)
            for args, kwargs in cmd.arguments:
                parser.add_argument(*args, **kwargs)
            parser.set_defaults(handler=cmd.handler)


def argument(*args, **kwargs) -> Tuple[tuple, dict]:
    return args, kwargs


def require(args, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f'--{name.replace("_", "-")} is required for {args.group} {args.action}')
    return value


def context_algebra(args):
    """The algebra named by --algebra, built within --max-degree."""
    return load_algebra(require(args, 'algebra'), max_degree=args.max_degree)


def context_module(args, alg, flag: str = 'module'):
    return load_module(require(args, flag), alg)


def context_second_module(args, alg, first):
    """--module2 when given, else the first module again."""
    if args.module2 is None:
        return first
    return load_module(args.module2, alg)
