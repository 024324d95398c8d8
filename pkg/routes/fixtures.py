"""fixtures emit."""
import os

from engine.fixtures import write_fixtures
from routes import EXIT_OK, CommandGroup, argument

fixtures_group = CommandGroup('fixtures', help='example algebras and modules')


@fixtures_group.command('emit', help='write the AlgebraFile (and ModuleFile) of a fixture', arguments=[
    argument('name', help='kronecker, klein4, dtilde4, etilde6, etilde7, etilde8 or atilde(p,q)'),
    argument('--dir', default='.', help='directory receiving the files (default: current directory)'),
])
def emit(args):
    written = write_fixtures(args.name, args.dir)
    return {'fixture': args.name, 'files': [os.path.basename(p) for p in written], 'written': written}, EXIT_OK
