package fixture.core;

import java.util.ArrayList;
import java.util.List;

public class EventBus {
    private final List<EventListener> listeners = new ArrayList<>();
    private EventListener primary;

    public interface Filter {
        boolean keep(String event);
    }

    public void register(EventListener listener) {
        if (primary == null) {
            primary = listener;
        }
        listeners.add(listener);
    }

    public void publish(String event) {
        for (EventListener listener : listeners) {
            listener.on(event);
        }
    }
}
