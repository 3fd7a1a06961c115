from repository import IRepository
from services.implementation.curve_service import CurveService
from services.implementation.hodge_series_service import HodgeSeriesService
from services.implementation.loop_zero_service import LoopZeroService
from services.implementation.verification_service import VerificationService

from services.interfaces.curve_service_interface import ICurveService
from services.interfaces.hodge_series_service_interface import IHodgeSeriesService
from services.interfaces.loop_zero_service_interface import ILoopZeroService
from services.interfaces.verification_service_interface import IVerificationService

def create_loop_zero_service(repository: IRepository) -> ILoopZeroService:
    return LoopZeroService(repository)

def create_hodge_series_service(repository: IRepository, loop_zero_service: ILoopZeroService) -> IHodgeSeriesService:
    return HodgeSeriesService(repository, loop_zero_service)

def create_curve_service(
    repository: IRepository,
    loop_zero_service: ILoopZeroService,
    hodge_series_service: IHodgeSeriesService
) -> ICurveService:
    return CurveService(repository, loop_zero_service, hodge_series_service)

def create_verification_service(
    loop_zero_service: ILoopZeroService,
    hodge_series_service: IHodgeSeriesService,
    curve_service: ICurveService,
    workers: int = 4
) -> IVerificationService:
    return VerificationService(loop_zero_service, hodge_series_service, curve_service, workers)
