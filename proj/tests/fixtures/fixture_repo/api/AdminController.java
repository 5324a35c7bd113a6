package fixture.api;

import fixture.core.EventBus;
import fixture.core.IAuditable;
import fixture.core.Marker;

@Marker("admin")
public class AdminController extends BaseController implements IAuditable {
    @Marker
    private EventBus events;

    @Override
    public String auditTag() {
        return "admin";
    }

    public void announce(String text) {
        events.publish("admin." + text);
    }
}
