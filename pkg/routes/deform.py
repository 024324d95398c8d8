"""deform certify | recheck."""
import logging

from config import Config
from engine.deformation import certify as certify_module
from engine.deformation import recheck as recheck_report
from routes import EXIT_OK, EXIT_VERIFICATION_FAILED, CommandGroup, context_algebra, context_module, require
from utils.errors import OutOfRangeError
from utils.helpers import load_json
from utils.validators import validate_levels

logger = logging.getLogger(__name__)

deform_group = CommandGroup('deform', help='deformation certificates')


@deform_group.command('certify', help='certify R(Λ, V) ≅ k[[t]] up to level --levels')
def certify(args):
    alg = context_algebra(args)
    v = context_module(args, alg)
    is_valid, message = validate_levels(args.levels)
    if not is_valid:
        raise OutOfRangeError(message)
    certificate = certify_module(v, levels=args.levels, mode=args.mode, seed=args.seed)
    provenance = {'seed': args.seed, 'field': alg.field.to_dict(),
                  'tool': Config.TOOL_NAME, 'tool_version': Config.TOOL_VERSION}
    if not certificate.certified:
        logger.warning('not certified: %s', ', '.join(certificate.failures) or certificate.status)
    return certificate.to_dict(provenance), EXIT_OK if certificate.certified else EXIT_VERIFICATION_FAILED


@deform_group.command('recheck', help='re-verify a certificate report from its stored matrices')
def recheck(args):
    result = recheck_report(load_json(require(args, 'report')))
    return result, EXIT_OK if result['agrees'] else EXIT_VERIFICATION_FAILED
