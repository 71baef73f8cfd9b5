// @sample drv_001 vul CWE-787 project=kdrivers date=2016-05-12
static long dev_ioctl(struct file *f, unsigned int cmd, unsigned long arg)
{
	struct dev_priv *priv = f->private_data;
	struct ioc_buf ib;

	switch (cmd) {
	case IOC_SET:
		if (copy_from_user(&ib, (void __user *)arg, sizeof(ib)))
			return -EFAULT;
		memcpy(priv->buf, ib.data, ib.len);
		priv->len = ib.len;
		break;
	case IOC_RESET:
		priv->len = 0;
		break;
	default:
		return -ENOTTY;
	}
	return 0;
}

// @sample drv_002 project=kdrivers date=2014-08-30
static int wait_ready(void __iomem *base, int timeout)
{
	while (timeout > 0) {
		if (readl(base + REG_STATUS) & STATUS_READY)
			return 0;
		udelay(10);
		timeout -= 10;
	}
	return -ETIMEDOUT;
}

// @sample drv_003 project=kdrivers date=2018-02-06
static int probe_channels(struct adc *adc)
{
	int i, found = 0;

	for (i = 0; i < ADC_MAX_CH; i++) {
		u32 v = adc_read_id(adc, i);
		if (v == 0 || v == 0xffffffff)
			continue;
		adc->ch[found].id = v;
		found++;
	}
	dev_info(adc->dev, "%d channels\n", found);
	return found;
}

// @sample drv_004 vul CWE-362 project=kdrivers date=2017-03-21
static int dev_open(struct inode *inode, struct file *f)
{
	struct dev_priv *priv = container_of(inode->i_cdev, struct dev_priv, cdev);

	if (priv->open_count > 0)
		return -EBUSY;
	priv->open_count++;
	f->private_data = priv;
	return 0;
}

// @sample drv_005 project=kdrivers date=2013-07-07
static void led_set(struct led *led, int level)
{
	u32 reg = readl(led->base);

	if (level > led->max)
		level = led->max;
	reg &= ~LED_MASK;
	reg |= level << LED_SHIFT;
	writel(reg, led->base);
}

// @sample drv_006 vul CWE-476 project=kdrivers date=2015-10-17
static int usb_get_config(struct usb_dev *udev, int idx)
{
	struct usb_config *cfg = udev->configs[idx];

	if (cfg->num_ifaces > USB_MAX_IFACES)
		return -EINVAL;
	udev->active = cfg;
	return cfg->num_ifaces;
}

// @sample drv_007 project=kdrivers date=2019-09-01
static int irq_to_bank(int irq, int first, int per_bank)
{
	int off = irq - first;

	if (off < 0)
		return -EINVAL;
	return off / per_bank;
}

// @sample drv_008 project=kdrivers date=2012-01-15
static void fifo_drain(struct uart_port *port)
{
	int budget = 256;

	while (budget > 0 && (readb(port->membase + UART_LSR) & UART_LSR_DR)) {
		unsigned char ch = readb(port->membase + UART_RX);
		tty_insert_flip_char(&port->state->port, ch, TTY_NORMAL);
		budget--;
	}
}

// @sample drv_009 vul CWE-190 project=kdrivers date=2016-12-07
static int dma_map_len(struct dma_req *req)
{
	unsigned int total = req->nents * req->ent_size;

	if (total > DMA_MAX_LEN)
		return -EINVAL;
	req->total = total;
	return 0;
}

// @sample drv_010 project=kdrivers date=2020-03-14
static int temp_to_millic(int raw, int gain, int offset)
{
	int t = raw * gain / 4096 + offset;

	if (t < -40000)
		t = -40000;
	if (t > 125000)
		t = 125000;
	return t;
}

// @sample drv_011 project=kdrivers date=2011-06-23
static int i2c_xfer_all(struct i2c_adapter *adap, struct i2c_msg *msgs, int num)
{
	int i, ret;

	for (i = 0; i < num; i++) {
		ret = i2c_xfer_one(adap, &msgs[i]);
		if (ret < 0)
			goto err;
	}
	return num;
err:
	i2c_recover(adap);
	return ret;
}

// @sample drv_012 vul CWE-125 project=kdrivers date=2018-10-30
static int hid_report_size(const u8 *desc, int len)
{
	int i = 0, size = 0;

	while (i < len) {
		u8 b = desc[i];
		int sz = b & 3;
		if (sz == 3)
			sz = 4;
		if ((b & 0xfc) == 0x74)
			size = desc[i + 1];
		i += sz + 1;
	}
	return size;
}

// @sample drv_013 project=kdrivers date=2014-04-04
static void gpio_set_multiple(struct gpio_chip *gc, unsigned long mask, unsigned long bits)
{
	int i;

	for (i = 0; i < gc->ngpio; i++) {
		if (mask & BIT(i))
			gc->set(gc, i, (bits >> i) & 1);
	}
}

// @sample drv_014 project=kdrivers date=2017-11-23
static int pwm_duty_ns(int period_ns, int percent)
{
	if (percent < 0 || percent > 100)
		return -EINVAL;
	else
		return period_ns / 100 * percent;
}

// @sample drv_015 vul CWE-400 project=kdrivers date=2015-06-18
static irqreturn_t net_irq(int irq, void *dev_id)
{
	struct nic *nic = dev_id;
	u32 status;

	status = nic_read(nic, NIC_ISR);
	while (status & NIC_ISR_RX) {
		nic_rx(nic);
		status = nic_read(nic, NIC_ISR);
	}
	nic_write(nic, NIC_ISR, status);
	return IRQ_HANDLED;
}

// @sample drv_016 project=kdrivers date=2013-03-31
static unsigned int baud_divisor(unsigned int clk, unsigned int baud)
{
	unsigned int div = (clk + 8 * baud) / (16 * baud);

	if (div == 0)
		div = 1;
	return div;
}

// @sample drv_017 project=kdrivers date=2021-02-02
static int spi_bits_ok(int bpw)
{
#ifdef CONFIG_SPI_WIDE
	if (bpw > 32)
		return 0;
#else
	if (bpw > 16)
		return 0;
#endif
	return bpw >= 4;
}

// @sample drv_018 vul CWE-667 project=kdrivers date=2016-07-28
static int queue_cmd(struct ctrl *c, struct cmd *cmd)
{
	spin_lock(&c->lock);
	if (c->nq >= c->qdepth)
		return -EBUSY;
	c->q[c->nq] = cmd;
	c->nq += 1;
	spin_unlock(&c->lock);
	return 0;
}

// @sample drv_019 project=kdrivers date=2012-09-19
static int clk_round_rate(unsigned long parent, unsigned long rate)
{
	unsigned long div = 1;

	while (parent / div > rate && div < 256)
		div <<= 1;
	return parent / div;
}

// @sample drv_020 project=kdrivers date=2019-04-26
static void fan_update(struct fan *f, int temp)
{
	if (temp > f->hot) {
		f->pwm = 255;
	} else if (temp < f->cold) {
		f->pwm = 0;
	} else {
		f->pwm = (temp - f->cold) * 255 / (f->hot - f->cold);
	}
}

// @sample drv_021 vul CWE-120 project=kdrivers date=2017-08-08
static ssize_t name_store(struct device *dev, const char *buf, size_t count)
{
	struct sensor *s = dev_get_drvdata(dev);
	size_t i;

	for (i = 0; i < count && buf[i] != '\n'; i++)
		s->name[i] = buf[i];
	s->name[i] = '\0';
	return count;
}
